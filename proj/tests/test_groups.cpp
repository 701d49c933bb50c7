#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "troplie/groups.hpp"
#include "troplie/rmatrix.hpp"

using namespace troplie;

namespace {

std::string dn(int k, int l) { return "D" + std::to_string(k) + "_" + std::to_string(l); }

LaurentPoly pair_term(const RegistryPtr& reg, const std::string& a, const std::string& b,
                      GaussianRational c) {
    int nv = reg->size();
    return LaurentPoly::monomial(
        reg, Monomial::of_var(nv, reg->index_of(a)) + Monomial::of_var(nv, reg->index_of(b)), c);
}

int grading_of(const RegistryPtr& reg, int n, const Monomial& m) {
    int g = 0;
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= k; ++l) {
            g += m.exps[reg->index_of(dn(k, l))] * (-l * (k - l));
            int c = reg->find("~" + dn(k, l));
            if (c >= 0) g += m.exps[c] * (-l * (k - l));
        }
    return g;
}

}  // namespace

TEST_CASE("BPlus n = 2 bracket table") {
    auto P = assemble(2, GroupFamily::BPlus);
    const auto& reg = P.registry();
    CHECK(reg->size() == 3);
    int d11 = reg->index_of("D1_1"), d21 = reg->index_of("D2_1"), d22 = reg->index_of("D2_2");
    CHECK(P.bracket(d11, d22).is_zero());
    CHECK(P.bracket(d21, d22).is_zero());
    CHECK(P.bracket(d11, d21) ==
          pair_term(reg, "D1_1", "D2_1", GaussianRational(Rational(-1, 2))));
}

TEST_CASE("GStar0 n = 2 bracket table and reality") {
    auto P = assemble(2, GroupFamily::GStar0);
    const auto& reg = P.registry();
    CHECK(reg->size() == 4);
    int d11 = reg->index_of("D1_1"), d21 = reg->index_of("D2_1");
    int c21 = reg->index_of("~D2_1"), d22 = reg->index_of("D2_2");
    GaussianRational I = GaussianRational::i();
    CHECK(P.bracket(d11, d21) ==
          pair_term(reg, "D1_1", "D2_1", -I * Rational(1, 2)));
    CHECK(P.bracket(d11, c21) ==
          pair_term(reg, "D1_1", "~D2_1", I * Rational(1, 2)));
    CHECK(P.bracket(d11, d22).is_zero());
    CHECK(P.bracket(d21, c21).is_zero());
    for (int n = 2; n <= 4; ++n) CHECK(check_reality(assemble(n, GroupFamily::GStar0)).passed);
}

TEST_CASE("GStar n = 2 mixed bracket reproduces the example") {
    auto P = assemble(2, GroupFamily::GStar);
    const auto& reg = P.registry();
    int d21 = reg->index_of("D2_1"), c21 = reg->index_of("~D2_1");
    int nv = reg->size();
    GaussianRational I = GaussianRational::i();
    Monomial sq = Monomial::of_var(nv, reg->index_of("D2_2"), 2) -
                  Monomial::of_var(nv, reg->index_of("D1_1"), 2);
    LaurentPoly want = LaurentPoly::monomial(reg, sq, I) +
                       LaurentPoly::monomial(
                           reg, Monomial::of_var(nv, reg->index_of("D1_1"), 2), -I);
    CHECK(P.bracket(d21, c21) == want);
    // holomorphic entries agree with GStar0
    auto P0 = assemble(2, GroupFamily::GStar0);
    CHECK(P.bracket(reg->index_of("D1_1"), d21) ==
          P0.bracket(reg->index_of("D1_1"), d21));
}

TEST_CASE("GStar passes reality, n <= 4") {
    for (int n = 2; n <= 4; ++n) CHECK(check_reality(assemble(n, GroupFamily::GStar)).passed);
}

TEST_CASE("log-canonical part of GStar matches GStar0 with higher-grade remainders") {
    for (int n = 2; n <= 3; ++n) {
        auto rep = check_log_canonical_part_matches_gstar0(n);
        if (!rep.passed)
            for (const auto& f : rep.failures) MESSAGE(f);
        CHECK(rep.passed);
    }
}

TEST_CASE("jacobiator vanishes on GStar, n = 2, 3") {
    for (int n = 2; n <= 3; ++n) {
        auto P = assemble(n, GroupFamily::GStar);
        int nv = P.registry()->size();
        for (int u = 0; u < nv; ++u)
            for (int v = u + 1; v < nv; ++v)
                for (int w = v + 1; w < nv; ++w) CHECK(jacobiator(P, u, v, w).is_zero());
    }
}

TEST_CASE("verify_gz passes for n = 2 and 3") {
    for (int n = 2; n <= 3; ++n) {
        auto rep = verify_gz(n);
        for (const auto& [name, ok] : rep.checks) {
            CAPTURE(name);
            CHECK(ok);
        }
        for (const auto& f : rep.failures) MESSAGE(f);
        CHECK(rep.passed);
    }
}

TEST_CASE("corrupted bracket fails the canonical-form check with a named pair") {
    auto P = assemble(2, GroupFamily::GStar);
    const auto& reg = P.registry();
    int d11 = reg->index_of("D1_1"), d21 = reg->index_of("D2_1"), c21 = reg->index_of("~D2_1");
    P.set_bracket(d11, d21, -P.bracket(d11, d21));
    P.set_bracket(d11, c21, -P.bracket(d11, c21));
    auto rep = verify_gz_on(P, 2);
    bool c2 = true;
    for (const auto& [name, ok] : rep.checks)
        if (name == "constant bracket in canonical form") c2 = ok;
    CHECK(!c2);
    CHECK(!rep.failures.empty());
}

TEST_CASE("weight -2l(k-l)+2 slice of the diagonal mixed bracket, n = 3") {
    int n = 3;
    auto P = assemble(n, GroupFamily::GStar);
    const auto& reg = P.registry();
    GaussianRational I = GaussianRational::i();
    for (int k = 2; k <= n; ++k)
        for (int l = 1; l < k; ++l) {
            LaurentPoly b = P.bracket(reg->index_of(dn(k, l)), reg->index_of("~" + dn(k, l)));
            int base = 2 * (-l * (k - l));
            LaurentPoly slice = LaurentPoly::zero(reg);
            for (const auto& [m, c] : b.terms())
                if (grading_of(reg, n, m) == base + 2)
                    slice = slice + LaurentPoly::monomial(reg, m, c);
            // shifted column set {n-l, n-l+2..n} and row set with n-k+l+1
            std::vector<int> Jp = {n - l};
            for (int j = n - l + 2; j <= n; ++j) Jp.push_back(j);
            std::vector<int> Ip;
            for (int i = n - k + 1; i <= n - k + l - 1; ++i) Ip.push_back(i);
            Ip.push_back(n - k + l + 1);
            auto gJ = minor_in_deltas(n, delta_rows(n, k, l), Jp, reg);
            auto gI = minor_in_deltas(n, Ip, delta_cols(n, l), reg);
            LaurentPoly want =
                (gJ * gJ.conj()).scaled(I) - (gI * gI.conj()).scaled(I);
            CHECK(slice == want);
        }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "troplie/networks.hpp"
#include "troplie/rmatrix.hpp"

#include <random>

using namespace troplie;

namespace {

// Three-wire example network: diagonal weights alpha, beta, gamma, slants
// a (1->2), then c (2->3), then b (1->2); its matrix is
// [[alpha, (a+b) beta, a c gamma], [0, beta, c gamma], [0, 0, gamma]].
struct ExampleNet {
    PlanarNetwork net;
    RegistryPtr reg;
    Weighting w;
    enum Slot { A, B, C, Alpha, Beta, Gamma };

    ExampleNet() {
        net.nports = 3;
        net.weight_names = {"a", "b", "c", "alpha", "beta", "gamma"};
        // wires with columns 0..4: vid = wire * 5 + col
        net.nvertices = 15;
        auto vid = [](int wire, int col) { return (wire - 1) * 5 + col; };
        for (int i = 1; i <= 3; ++i) {
            net.sources.push_back(vid(i, 0));
            net.sinks.push_back(vid(i, 4));
            for (int c = 0; c < 4; ++c)
                net.edges.push_back({vid(i, c), vid(i, c + 1), c == 3 ? Alpha + i - 1 : -1});
        }
        net.edges.push_back({vid(1, 0), vid(2, 1), A});
        net.edges.push_back({vid(2, 1), vid(3, 2), C});
        net.edges.push_back({vid(1, 2), vid(2, 3), B});
        net.finalize();
        auto mreg = std::make_shared<VarRegistry>();
        for (const auto& name : net.weight_names) mreg->add_real(name);
        reg = mreg;
        for (int i = 0; i < 6; ++i) w.push_back(LaurentPoly::variable(reg, i));
    }

    LaurentPoly v(int slot) const { return w[slot]; }
};

LaurentPoly det(const std::vector<std::vector<LaurentPoly>>& M, const std::vector<int>& I,
                const std::vector<int>& J, const RegistryPtr& reg) {
    size_t k = I.size();
    std::vector<int> perm(k);
    for (size_t i = 0; i < k; ++i) perm[i] = static_cast<int>(i);
    LaurentPoly out = LaurentPoly::zero(reg);
    do {
        int inv = 0;
        for (size_t a = 0; a < k; ++a)
            for (size_t b = a + 1; b < k; ++b)
                if (perm[a] > perm[b]) ++inv;
        LaurentPoly prod = LaurentPoly::constant(reg, GaussianRational(inv % 2 ? -1 : 1));
        for (size_t i = 0; i < k; ++i) prod = prod * M[I[i] - 1][J[perm[i]] - 1];
        out = out + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int x = start; x <= n; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

RegistryPtr delta_registry(int n) {
    auto reg = std::make_shared<VarRegistry>();
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= k; ++l)
            reg->add_real("D" + std::to_string(k) + "_" + std::to_string(l));
    return reg;
}

}  // namespace

TEST_CASE("example network matrix matches the printed form") {
    ExampleNet x;
    auto M = matrix_from_network(x.net, x.w);
    CHECK(M[0][0] == x.v(ExampleNet::Alpha));
    CHECK(M[0][1] == (x.v(ExampleNet::A) + x.v(ExampleNet::B)) * x.v(ExampleNet::Beta));
    CHECK(M[0][2] == x.v(ExampleNet::A) * x.v(ExampleNet::C) * x.v(ExampleNet::Gamma));
    CHECK(M[1][1] == x.v(ExampleNet::Beta));
    CHECK(M[1][2] == x.v(ExampleNet::C) * x.v(ExampleNet::Gamma));
    CHECK(M[2][2] == x.v(ExampleNet::Gamma));
    CHECK(M[1][0].is_zero());
    CHECK(M[2][0].is_zero());
    CHECK(M[2][1].is_zero());
}

TEST_CASE("example network minors match determinants") {
    ExampleNet x;
    auto M = matrix_from_network(x.net, x.w);
    CHECK(minor_lindstrom(x.net, x.w, {1}, {3}) ==
          x.v(ExampleNet::A) * x.v(ExampleNet::C) * x.v(ExampleNet::Gamma));
    for (int k = 1; k <= 3; ++k)
        for (const auto& I : subsets(3, k))
            for (const auto& J : subsets(3, k))
                CHECK(minor_lindstrom(x.net, x.w, I, J) == det(M, I, J, x.reg));
}

TEST_CASE("staircase network shape") {
    CHECK_THROWS_AS(build_gamma_s(0), std::invalid_argument);
    auto g1 = build_gamma_s(1);
    CHECK(g1.weight_names == std::vector<std::string>{"d1"});
    auto m1 = symbolic_weighting(g1);
    CHECK(matrix_from_network(g1, m1.second)[0][0] == LaurentPoly::variable(m1.first, 0));

    auto g2 = build_gamma_s(2);
    CHECK(g2.weight_names.size() == 3);
    auto g4 = build_gamma_s(4);
    CHECK(g4.weight_names.size() == 10);
}

TEST_CASE("staircase matrix entries are generic upper triangular") {
    auto net = build_gamma_s(2);
    auto [reg, w] = symbolic_weighting(net);
    auto M = matrix_from_network(net, w);
    // w1 the slant, d1, d2 the diagonals
    CHECK(M[0][0] == LaurentPoly::variable(reg, 1));
    CHECK(M[0][1] == LaurentPoly::variable(reg, 0) * LaurentPoly::variable(reg, 2));
    CHECK(M[1][1] == LaurentPoly::variable(reg, 2));
    CHECK(M[1][0].is_zero());
}

TEST_CASE("Lindstrom equals determinant on random weightings, n <= 5") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(1, 9);
    for (int n = 2; n <= 5; ++n) {
        auto net = build_gamma_s(n);
        int trials = n <= 4 ? 40 : 30;
        for (int trial = 0; trial < trials; ++trial) {
            auto reg = std::make_shared<VarRegistry>();
            reg->add_real("t");
            RegistryPtr creg = reg;
            Weighting w;
            for (size_t i = 0; i < net.weight_names.size(); ++i)
                w.push_back(LaurentPoly::constant(
                    creg, GaussianRational(Rational(num(rng), num(rng)))));
            auto M = matrix_from_network(net, w);
            for (int k = 1; k <= std::min(n, 3); ++k) {
                auto all = subsets(n, k);
                std::vector<int> I, J;
                I = all[std::uniform_int_distribution<int>(
                    0, static_cast<int>(all.size()) - 1)(rng)];
                J = all[std::uniform_int_distribution<int>(
                    0, static_cast<int>(all.size()) - 1)(rng)];
                CHECK(minor_lindstrom(net, w, I, J) == det(M, I, J, creg));
            }
        }
    }
}

TEST_CASE("solid minors of the staircase network are monic monomials") {
    for (int n = 1; n <= 4; ++n) {
        auto net = build_gamma_s(n);
        auto [reg, w] = symbolic_weighting(net);
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= k; ++l) {
                auto d = minor_lindstrom(net, w, delta_rows(n, k, l), delta_cols(n, l));
                REQUIRE(d.terms().size() == 1);
                CHECK(d.terms().begin()->second == GaussianRational(1));
            }
    }
}

TEST_CASE("weight inversion round trip, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        auto reg = delta_registry(n);
        auto solved = solve_weights_from_deltas(n, reg);
        auto net = build_gamma_s(n);
        Weighting w;
        for (const auto& mono : solved)
            w.push_back(LaurentPoly::monomial(reg, mono, GaussianRational(1)));
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= k; ++l) {
                auto d = minor_lindstrom(net, w, delta_rows(n, k, l), delta_cols(n, l));
                int var = reg->index_of("D" + std::to_string(k) + "_" + std::to_string(l));
                CHECK(d == LaurentPoly::variable(reg, var));
            }
    }
}

TEST_CASE("weight inversion small cases") {
    auto reg = delta_registry(2);
    auto solved = solve_weights_from_deltas(2, reg);
    // slots: w1, d1, d2; D1_1 = d2, D2_1 = w1 d2, D2_2 = d1 d2
    CHECK(solved[1] == Monomial::of_var(3, reg->index_of("D2_2")) -
                           Monomial::of_var(3, reg->index_of("D1_1")));
    CHECK(solved[2] == Monomial::of_var(3, reg->index_of("D1_1")));
    CHECK(solved[0] == Monomial::of_var(3, reg->index_of("D2_1")) -
                           Monomial::of_var(3, reg->index_of("D1_1")));
}

TEST_CASE("minor_in_deltas basics") {
    for (int n = 2; n <= 4; ++n) {
        auto reg = delta_registry(n);
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= k; ++l) {
                int var = reg->index_of("D" + std::to_string(k) + "_" + std::to_string(l));
                CHECK(minor_in_deltas(n, delta_rows(n, k, l), delta_cols(n, l), reg) ==
                      LaurentPoly::variable(reg, var));
            }
    }
    auto reg2 = delta_registry(2);
    CHECK(minor_in_deltas(2, {2}, {1}, reg2).is_zero());
    // g11 = D2_2 / D1_1
    CHECK(minor_in_deltas(2, {1}, {1}, reg2) ==
          LaurentPoly::monomial(reg2,
                                Monomial::of_var(3, reg2->index_of("D2_2")) -
                                    Monomial::of_var(3, reg2->index_of("D1_1")),
                                GaussianRational(1)));
}

TEST_CASE("grading of minors in delta coordinates") {
    // deg g_{I,J} = sum I - sum J with deg D{k}_{l} = -l(k-l); every monomial
    // of minor_in_deltas must sit in the single grading of its minor
    for (int n = 2; n <= 4; ++n) {
        auto reg = delta_registry(n);
        std::vector<int> deg(reg->size(), 0);
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= k; ++l)
                deg[reg->index_of("D" + std::to_string(k) + "_" + std::to_string(l))] =
                    -l * (k - l);
        for (int sz = 1; sz <= n; ++sz)
            for (const auto& I : subsets(n, sz))
                for (const auto& J : subsets(n, sz)) {
                    auto p = minor_in_deltas(n, I, J, reg);
                    int want = 0;
                    for (int i : I) want += i;
                    for (int j : J) want -= j;
                    for (const auto& [m, c] : p.terms()) {
                        int got = 0;
                        for (int v = 0; v < reg->size(); ++v) got += m.exps[v] * deg[v];
                        CHECK(got == want);
                    }
                }
    }
}

TEST_CASE("path system enumeration reports signs") {
    // a crossing pair of wires gives a single system with sign -1
    PlanarNetwork net;
    net.nports = 2;
    net.nvertices = 4;
    net.sources = {0, 1};
    net.sinks = {2, 3};
    net.weight_names = {"p", "q"};
    net.edges.push_back({0, 3, 0});
    net.edges.push_back({1, 2, 1});
    net.finalize();
    int count = 0, sign = 0;
    for_each_path_system(net, {1, 2}, {1, 2}, [&](int s, const std::vector<int>&) {
        ++count;
        sign = s;
    });
    CHECK(count == 1);
    CHECK(sign == -1);
}

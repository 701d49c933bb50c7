#include "troplie/groups.hpp"

#include "troplie/rmatrix.hpp"

#include <stdexcept>

namespace troplie {

namespace {

std::string dname(int k, int l) { return "D" + std::to_string(k) + "_" + std::to_string(l); }

struct GenInfo {
    int k = 0, l = 0;
    bool conjugate = false;
};

std::vector<GenInfo> generator_table(int n, const RegistryPtr& reg) {
    std::vector<GenInfo> info(reg->size());
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= k; ++l) {
            info[reg->index_of(dname(k, l))] = {k, l, false};
            int c = reg->find("~" + dname(k, l));
            if (c >= 0) info[c] = {k, l, true};
        }
    return info;
}

/// Complex mixed bracket {Delta^(kd)_ld, Lambda^(kc)_lc} via the sandwich
/// formula, converted to Delta coordinates; the caller applies the real-form
/// factor i.
LaurentPoly mixed_sandwich(int n, const RegistryPtr& reg, int kd, int ld, int kc, int lc) {
    MinorSymbol L(MinorSymbol::Tag::G, delta_rows(n, kd, ld), delta_cols(n, ld));
    MinorSymbol M(MinorSymbol::Tag::FInv, delta_cols(n, lc), delta_rows(n, kc, lc));
    MinorExpression expr = simplify_triangular(bracket_sandwich(L, M, n));
    LaurentPoly out = LaurentPoly::zero(reg);
    for (const auto& [syms, c] : expr.terms()) {
        LaurentPoly p = LaurentPoly::constant(reg, c);
        for (const auto& s : syms) {
            if (s.tag == MinorSymbol::Tag::G)
                p = p * minor_in_deltas(n, s.rows, s.cols, reg);
            else
                // (f^-1)_{S,T} = conj g_{T,S} on the real form
                p = p * minor_in_deltas(n, s.cols, s.rows, reg).conj();
        }
        out = out + p;
    }
    return out;
}

}  // namespace

RegistryPtr group_registry(int n, GroupFamily family) {
    if (n < 1) throw std::invalid_argument("group_registry needs n >= 1");
    auto reg = std::make_shared<VarRegistry>();
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= k; ++l) {
            if (family == GroupFamily::BPlus || l == k)
                reg->add_real(dname(k, l));
            else
                reg->add_complex_pair(dname(k, l));
        }
    return reg;
}

PoissonStructure assemble(int n, GroupFamily family) {
    RegistryPtr reg = group_registry(n, family);
    auto info = generator_table(n, reg);
    PoissonStructure P(reg);
    int nv = reg->size();
    GaussianRational I = GaussianRational::i();
    auto prod = [&](int u, int v, const GaussianRational& c) {
        return LaurentPoly::monomial(reg, Monomial::of_var(nv, u) + Monomial::of_var(nv, v), c);
    };
    for (int u = 0; u < nv; ++u) {
        for (int v = u + 1; v < nv; ++v) {
            const GenInfo &a = info[u], &b = info[v];
            if (family == GroupFamily::BPlus) {
                Rational c = coeff_delta_delta(n, a.k, a.l, b.k, b.l);
                P.set_bracket(u, v, prod(u, v, GaussianRational(c)));
                continue;
            }
            if (a.conjugate == b.conjugate) {
                Rational c = coeff_delta_delta(n, a.k, a.l, b.k, b.l);
                GaussianRational coeff = a.conjugate ? -I * c : I * c;
                P.set_bracket(u, v, prod(u, v, coeff));
                continue;
            }
            // mixed pair: d the Delta side (non-conjugate), c the Lambda side
            int ud = a.conjugate ? v : u, uc = a.conjugate ? u : v;
            const GenInfo &d = info[ud], &cc = info[uc];
            if (family == GroupFamily::GStar0) {
                Rational c = coeff_delta_lambda(n, d.k, d.l, cc.k, cc.l);
                P.set_bracket(ud, uc, prod(ud, uc, I * c));
            } else {
                P.set_bracket(ud, uc, mixed_sandwich(n, reg, d.k, d.l, cc.k, cc.l).scaled(I));
            }
        }
    }
    return P;
}

GroupReport check_log_canonical_part_matches_gstar0(int n) {
    GroupReport rep;
    PoissonStructure P = assemble(n, GroupFamily::GStar);
    PoissonStructure P0 = assemble(n, GroupFamily::GStar0);
    const RegistryPtr& reg = P.registry();
    auto info = generator_table(n, reg);
    for (int u = 0; u < reg->size(); ++u)
        for (int v = u + 1; v < reg->size(); ++v)
            if (!(log_canonical_coeff(P, u, v) == log_canonical_coeff(P0, u, v)))
                rep.fail("log-canonical coefficient mismatch at {" + reg->name(u) + "," +
                         reg->name(v) + "}");
    // remainder monomials must sit in strictly higher grading than the
    // product monomial, deg D{k}_{l} = deg ~D{k}_{l} = -l(k-l)
    std::vector<int> deg(reg->size());
    for (int i = 0; i < reg->size(); ++i) deg[i] = -info[i].l * (info[i].k - info[i].l);
    LogCanonicalPart parts = split_log_canonical(P);
    for (const auto& [pair, rem] : parts.remainder) {
        int base = deg[pair.first] + deg[pair.second];
        for (const auto& [m, c] : rem.terms()) {
            int g = 0;
            for (int i = 0; i < reg->size(); ++i) g += m.exps[i] * deg[i];
            if (g <= base)
                rep.fail("remainder grading not higher at {" + reg->name(pair.first) + "," +
                         reg->name(pair.second) + "}");
        }
    }
    return rep;
}

VerifyGZReport verify_gz_on(const PoissonStructure& P, int n) {
    VerifyGZReport rep;
    auto zeta_name = [&](int k, int l) {
        return (l == k ? "xi:" : "zeta:") + dname(k, l);
    };

    // (1) tropical cone vs the rhombus cone, both in lex (k, l) order
    bool c1 = false;
    try {
        c1 = cone_equal(tropical_cone(P), gz_cone(n));
    } catch (const std::exception& e) {
        rep.failures.push_back(std::string("cone comparison failed: ") + e.what());
    }
    rep.record("cone equals gz_cone", c1);

    ConstantBracket cb = constant_bracket(P);

    // (2) {zeta^(k)_l, phi^(p)_q} = 1/4 (eps(k-p) - 1)(C-R); other blocks 0
    bool c2 = true;
    std::vector<std::pair<int, int>> all, cpx;
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= k; ++l) {
            all.emplace_back(k, l);
            if (l < k) cpx.emplace_back(k, l);
        }
    for (const auto& [k, l] : all)
        for (const auto& [p, q] : all) {
            int a = cb.find_coord(zeta_name(k, l)), b = cb.find_coord(zeta_name(p, q));
            if (!(cb.entry(a, b) == 0)) {
                c2 = false;
                rep.failures.push_back("nonzero action-action entry at {" + zeta_name(k, l) +
                                       "," + zeta_name(p, q) + "}");
            }
        }
    for (const auto& [k, l] : cpx)
        for (const auto& [p, q] : cpx) {
            int a = cb.find_coord("phi:" + dname(k, l)), b = cb.find_coord("phi:" + dname(p, q));
            if (!(cb.entry(a, b) == 0)) {
                c2 = false;
                rep.failures.push_back("nonzero angle-angle entry at {" + dname(k, l) + "," +
                                       dname(p, q) + "}");
            }
        }
    for (const auto& [k, l] : all)
        for (const auto& [p, q] : cpx) {
            int a = cb.find_coord(zeta_name(k, l)), b = cb.find_coord("phi:" + dname(p, q));
            int C = setcap(delta_cols(n, l), delta_cols(n, q));
            int R = setcap(delta_rows(n, k, l), delta_rows(n, p, q));
            Rational want((eps(k - p) - 1) * (C - R), 4);
            if (!(cb.entry(a, b) == want)) {
                c2 = false;
                rep.failures.push_back("canonical-form mismatch at {" + zeta_name(k, l) +
                                       ", phi:" + dname(p, q) + "}");
            }
        }
    rep.record("constant bracket in canonical form", c2);

    // (3) Casimirs are exactly the top-row actions
    std::vector<std::string> want_cas;
    for (int l = 1; l <= n; ++l) want_cas.push_back(zeta_name(n, l));
    std::sort(want_cas.begin(), want_cas.end());
    auto cas = casimirs(cb);
    std::sort(cas.begin(), cas.end());
    rep.record("casimirs are the top row", cas == want_cas);

    // (4) Liouville pairing lower triangular with diagonal -1/2
    rep.record("liouville pairing", check_liouville_structure(cb, n).passed);

    // (5) explicit angle change: Q[M][N] = {lambda_M, phi_N} with
    // lambda^(k)_l = 2 (zeta^(k)_l - zeta^(k)_{l-1}) must be lower
    // triangular with diagonal -1, and psi = -(Q^T)^{-1} phi pairs as
    // {lambda_M, psi_N} = -delta through a unitriangular change
    bool c5 = true;
    std::vector<std::pair<int, int>> ms, ns;
    for (int k = n - 1; k >= 1; --k)
        for (int l = 1; l <= k; ++l) ms.emplace_back(k, l);
    for (int p = n; p >= 2; --p)
        for (int q = 1; q < p; ++q) ns.emplace_back(p, q);
    int m = static_cast<int>(ms.size());
    std::vector<std::vector<Rational>> Q(m, std::vector<Rational>(m));
    for (int a = 0; a < m; ++a) {
        auto [k, l] = ms[a];
        for (int b = 0; b < m; ++b) {
            int phi = cb.find_coord("phi:" + dname(ns[b].first, ns[b].second));
            Rational x = cb.entry(cb.find_coord(zeta_name(k, l)), phi);
            if (l >= 2) x -= cb.entry(cb.find_coord(zeta_name(k, l - 1)), phi);
            Q[a][b] = 2 * x;
        }
    }
    for (int a = 0; a < m && c5; ++a) {
        if (Q[a][a] != -1) c5 = false;
        for (int b = a + 1; b < m; ++b)
            if (Q[a][b] != 0) c5 = false;
    }
    if (c5) {
        // S = -(Q^T)^{-1} by exact elimination
        std::vector<std::vector<Rational>> A(m, std::vector<Rational>(2 * m, Rational(0)));
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < m; ++c) A[r][c] = Q[c][r];
            A[r][m + r] = 1;
        }
        for (int c = 0; c < m; ++c) {
            int piv = -1;
            for (int r = c; r < m; ++r)
                if (A[r][c] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                c5 = false;
                break;
            }
            std::swap(A[c], A[piv]);
            Rational pval = A[c][c];
            for (int j = 0; j < 2 * m; ++j) A[c][j] /= pval;
            for (int r = 0; r < m; ++r) {
                if (r == c || A[r][c] == 0) continue;
                Rational f = A[r][c];
                for (int j = 0; j < 2 * m; ++j) A[r][j] -= f * A[c][j];
            }
        }
        if (c5) {
            std::vector<std::vector<Rational>> S(m, std::vector<Rational>(m));
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) S[r][c] = -A[r][m + c];
            for (int a = 0; a < m && c5; ++a)
                for (int b = 0; b < m && c5; ++b) {
                    Rational got = 0;
                    for (int c = 0; c < m; ++c) got += S[b][c] * Q[a][c];
                    if (got != (a == b ? Rational(-1) : Rational(0))) c5 = false;
                }
            // phi = T psi with T = -Q^T unitriangular: each angle is its
            // psi plus a combination of later ones
            for (int a = 0; a < m && c5; ++a) {
                if (-Q[a][a] != 1) c5 = false;
                for (int b = 0; b < a; ++b)
                    if (Q[b][a] != 0) c5 = false;
            }
        }
    }
    rep.record("angle change of variables", c5);
    return rep;
}

VerifyGZReport verify_gz(int n) { return verify_gz_on(assemble(n, GroupFamily::GStar), n); }

}  // namespace troplie

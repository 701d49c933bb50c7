#include "troplie/poisson.hpp"

#include <stdexcept>

namespace troplie {

void PoissonStructure::set_bracket(int u, int v, LaurentPoly p) {
    if (u == v) throw std::invalid_argument("diagonal bracket must stay zero");
    if (u < 0 || v < 0 || u >= reg_->size() || v >= reg_->size())
        throw std::invalid_argument("generator index out of range");
    if (p.registry() && *p.registry() != *reg_)
        throw std::invalid_argument("bracket polynomial registry mismatch");
    if (u > v) {
        std::swap(u, v);
        p = -p;
    }
    if (p.is_zero())
        table_.erase({u, v});
    else
        table_[{u, v}] = std::move(p);
}

LaurentPoly PoissonStructure::bracket(int u, int v) const {
    if (u == v) return LaurentPoly::zero(reg_);
    bool flip = u > v;
    if (flip) std::swap(u, v);
    auto it = table_.find({u, v});
    if (it == table_.end()) return LaurentPoly::zero(reg_);
    return flip ? -it->second : it->second;
}

LogCanonicalPart split_log_canonical(const PoissonStructure& P) {
    LogCanonicalPart out;
    int nv = P.registry()->size();
    for (const auto& [pair, poly] : P.table()) {
        Monomial uv = Monomial::of_var(nv, pair.first) + Monomial::of_var(nv, pair.second);
        GaussianRational pi = poly.coeff(uv);
        out.pi[pair] = pi;
        out.remainder[pair] = poly - LaurentPoly::monomial(P.registry(), uv, pi);
    }
    return out;
}

GaussianRational log_canonical_coeff(const PoissonStructure& P, int u, int v) {
    if (u == v) return GaussianRational();
    int nv = P.registry()->size();
    Monomial uv = Monomial::of_var(nv, u) + Monomial::of_var(nv, v);
    return P.bracket(u, v).coeff(uv);
}

RealityReport check_reality(const PoissonStructure& P) {
    RealityReport rep;
    const VarRegistry& reg = *P.registry();
    auto label = [&](int u, int v) { return "{" + reg.name(u) + "," + reg.name(v) + "}"; };

    for (int u = 0; u < reg.size(); ++u) {
        for (int v = u + 1; v < reg.size(); ++v) {
            VarKind ku = reg.var(u).kind, kv = reg.var(v).kind;
            int uc = reg.conj_index(u), vc = reg.conj_index(v);
            LaurentPoly b = P.bracket(u, v);

            if (ku == VarKind::Complex && kv == VarKind::Complex) {
                if (P.bracket(uc, vc) != b.conj())
                    rep.fail("bivector reality: " + label(uc, vc) + " != conj" + label(u, v));
            }
            if (ku == VarKind::RealPositive && kv == VarKind::Complex) {
                if (P.bracket(u, vc) != b.conj())
                    rep.fail("bivector reality: " + label(u, vc) + " != conj" + label(u, v));
            }
            if (ku == VarKind::Complex && kv == VarKind::Conjugate) {
                // {z_a, ~z_b} = -conj {z_b, ~z_a}
                if (P.bracket(vc, uc) != -b.conj())
                    rep.fail("bivector reality: " + label(vc, uc) + " != -conj" + label(u, v));
            }

            GaussianRational pi = log_canonical_coeff(P, u, v);
            if (ku == VarKind::RealPositive && kv == VarKind::RealPositive) {
                if (!pi.is_zero()) rep.fail("pi != 0 for real pair " + label(u, v));
            } else if (ku == VarKind::RealPositive || kv == VarKind::RealPositive) {
                if (reg.var(ku == VarKind::RealPositive ? v : u).kind == VarKind::Complex &&
                    pi.re != 0)
                    rep.fail("Re pi != 0 for " + label(u, v));
            } else if (ku == VarKind::Complex &&
                       (kv == VarKind::Complex || kv == VarKind::Conjugate)) {
                if (pi.re != 0) rep.fail("Re pi != 0 for " + label(u, v));
            }
        }
    }
    return rep;
}

LaurentPoly bracket_leibniz(const PoissonStructure& P, int u, const LaurentPoly& p) {
    int nv = P.registry()->size();
    LaurentPoly out = LaurentPoly::zero(P.registry());
    for (const auto& [m, c] : p.terms()) {
        for (int j = 0; j < nv; ++j) {
            int e = m.exps[j];
            if (e == 0 || j == u) continue;
            LaurentPoly uj = P.bracket(u, j);
            if (uj.is_zero()) continue;
            Monomial shifted = m - Monomial::of_var(nv, j);
            out = out + (uj * LaurentPoly::monomial(P.registry(), shifted,
                                                    c * GaussianRational(e)));
        }
    }
    return out;
}

LaurentPoly poisson_bracket(const PoissonStructure& P, const LaurentPoly& a,
                            const LaurentPoly& b) {
    int nv = P.registry()->size();
    LaurentPoly out = LaurentPoly::zero(P.registry());
    for (int u = 0; u < nv; ++u) {
        LaurentPoly da = a.derivative(u);
        if (da.is_zero()) continue;
        LaurentPoly ub = bracket_leibniz(P, u, b);
        if (ub.is_zero()) continue;
        out = out + da * ub;
    }
    return out;
}

LaurentPoly jacobiator(const PoissonStructure& P, int u, int v, int w) {
    if (u == v || v == w || u == w)
        throw std::invalid_argument("jacobiator requires distinct generators");
    return bracket_leibniz(P, u, P.bracket(v, w)) + bracket_leibniz(P, v, P.bracket(w, u)) +
           bracket_leibniz(P, w, P.bracket(u, v));
}

}  // namespace troplie

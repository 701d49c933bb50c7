#include "troplie/tropical.hpp"

#include <sstream>
#include <stdexcept>

namespace troplie {

TropicalCoordinates TropicalCoordinates::of(RegistryPtr reg) {
    TropicalCoordinates tc;
    tc.reg = std::move(reg);
    int nv = tc.reg->size();
    tc.cone_coord_of.assign(nv, -1);
    for (int i = 0; i < nv; ++i) {
        switch (tc.reg->var(i).kind) {
            case VarKind::RealPositive:
                tc.cone_coord_of[i] = static_cast<int>(tc.coords.size());
                tc.coords.push_back({Kind::Xi, i, "xi:" + tc.reg->name(i)});
                break;
            case VarKind::Complex:
                tc.cone_coord_of[i] = static_cast<int>(tc.coords.size());
                tc.coords.push_back({Kind::Zeta, i, "zeta:" + tc.reg->name(i)});
                break;
            case VarKind::Conjugate:
                tc.cone_coord_of[i] = tc.cone_coord_of[tc.reg->var(i).partner];
                break;
        }
    }
    tc.cone_dim = static_cast<int>(tc.coords.size());
    for (int i = 0; i < nv; ++i)
        if (tc.reg->var(i).kind == VarKind::Complex)
            tc.coords.push_back({Kind::Phi, i, "phi:" + tc.reg->name(i)});
    return tc;
}

std::vector<std::string> TropicalCoordinates::cone_names() const {
    std::vector<std::string> names;
    for (int c = 0; c < cone_dim; ++c) names.push_back(coords[c].name);
    return names;
}

StrictCone tropical_cone(const PoissonStructure& P) {
    TropicalCoordinates tc = TropicalCoordinates::of(P.registry());
    StrictCone cone(tc.cone_dim, tc.cone_names());
    LogCanonicalPart split = split_log_canonical(P);
    int nv = P.registry()->size();
    for (const auto& [pair, rem] : split.remainder) {
        IntVec lhs(tc.cone_dim, 0);
        lhs[tc.cone_coord_of[pair.first]] += 1;
        lhs[tc.cone_coord_of[pair.second]] += 1;
        for (const auto& [m, c] : rem.terms()) {
            IntVec normal = lhs;
            for (int j = 0; j < nv; ++j) normal[tc.cone_coord_of[j]] -= m.exps[j];
            bool zero = true;
            for (const auto& x : normal)
                if (x != 0) zero = false;
            if (zero) {
                // 0 > 0 is unsatisfiable; encode as a contradictory pair
                IntVec e(tc.cone_dim, 0);
                e[0] = 1;
                cone.add_normal(e);
                e[0] = -1;
                cone.add_normal(e);
            } else {
                cone.add_normal(normal);
            }
        }
    }
    return cone;
}

int ConstantBracket::find_coord(const std::string& name) const {
    for (size_t i = 0; i < coords.coords.size(); ++i)
        if (coords.coords[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown limit coordinate " + name);
}

ConstantBracket constant_bracket(const PoissonStructure& P) {
    ConstantBracket cb;
    cb.coords = TropicalCoordinates::of(P.registry());
    int nc = static_cast<int>(cb.coords.coords.size());
    cb.matrix.assign(nc, std::vector<Rational>(nc, Rational(0)));
    const VarRegistry& reg = *P.registry();

    if (!cb.coords.is_complex_case()) {
        for (int a = 0; a < nc; ++a) {
            for (int b = a + 1; b < nc; ++b) {
                GaussianRational pi =
                    log_canonical_coeff(P, cb.coords.coords[a].var, cb.coords.coords[b].var);
                if (pi.im != 0)
                    throw std::invalid_argument("non-real pi coefficient in all-real structure");
                cb.matrix[a][b] = pi.re;
                cb.matrix[b][a] = -pi.re;
            }
        }
        return cb;
    }

    RealityReport rep = check_reality(P);
    if (!rep.passed)
        throw std::runtime_error("reality conditions violated: " + rep.failures.front());

    for (int a = 0; a < nc; ++a) {
        if (cb.coords.coords[a].kind != TropicalCoordinates::Kind::Phi) continue;
        int zb = cb.coords.coords[a].var;  // complex variable of phi_a
        for (int c = 0; c < cb.coords.cone_dim; ++c) {
            int v = cb.coords.coords[c].var;
            Rational entry;
            if (cb.coords.coords[c].kind == TropicalCoordinates::Kind::Xi) {
                entry = log_canonical_coeff(P, v, zb).im;
            } else {
                GaussianRational pab = log_canonical_coeff(P, v, zb);
                GaussianRational pabbar = log_canonical_coeff(P, v, reg.conj_index(zb));
                entry = (pab.im - pabbar.im) / 2;
            }
            cb.matrix[c][a] = entry;
            cb.matrix[a][c] = -entry;
        }
    }
    return cb;
}

namespace {

using Cx = std::complex<double>;

// d(coord)/d(var) at the sample point; zero when the variable does not feed
// the coordinate.
Cx coord_derivative(const TropicalCoordinates& tc, const TropicalCoordinates::Coord& c, int var,
                    double t, const Cx& value) {
    const VarRegistry& reg = *tc.reg;
    switch (c.kind) {
        case TropicalCoordinates::Kind::Xi:
            return var == c.var ? Cx(1.0 / (t * value.real()), 0.0) : Cx(0.0);
        case TropicalCoordinates::Kind::Zeta:
            if (var == c.var || var == reg.conj_index(c.var)) return 1.0 / (2.0 * t * value);
            return Cx(0.0);
        case TropicalCoordinates::Kind::Phi:
            if (var == c.var) return 1.0 / (Cx(0.0, 2.0) * value);
            if (var == reg.conj_index(c.var)) return -1.0 / (Cx(0.0, 2.0) * value);
            return Cx(0.0);
    }
    return Cx(0.0);
}

}  // namespace

DeviationTable limit_sample(const PoissonStructure& P, const std::vector<Rational>& eta,
                            const std::vector<double>& phis, const std::vector<double>& ts) {
    TropicalCoordinates tc = TropicalCoordinates::of(P.registry());
    StrictCone cone = tropical_cone(P);
    if (static_cast<int>(eta.size()) != cone.dim)
        throw std::invalid_argument("limit_sample: eta dimension mismatch");
    for (const auto& n : cone.normals) {
        Rational dot = 0;
        for (int j = 0; j < cone.dim; ++j) dot += Rational(n[j]) * eta[j];
        if (dot < 1) throw std::invalid_argument("limit_sample: eta lacks slack >= 1 in the cone");
    }
    int nphi = static_cast<int>(tc.coords.size()) - tc.cone_dim;
    if (static_cast<int>(phis.size()) != nphi)
        throw std::invalid_argument("limit_sample: need one angle per complex variable");

    ConstantBracket cb = constant_bracket(P);
    int s = tc.is_complex_case() ? 1 : 2;
    int nv = P.registry()->size();
    int nc = static_cast<int>(tc.coords.size());

    DeviationTable table;
    for (double t : ts) {
        // sample point x = e^{t xi}, z = e^{t zeta + i phi}
        std::vector<Cx> pt(nv);
        for (int i = 0; i < nv; ++i) {
            int cc = tc.cone_coord_of[i];
            double mag = std::exp(t * to_double(eta[cc]));
            switch (P.registry()->var(i).kind) {
                case VarKind::RealPositive:
                    pt[i] = mag;
                    break;
                case VarKind::Complex: {
                    int pc = 0;
                    for (int c = tc.cone_dim; c < nc; ++c)
                        if (tc.coords[c].var == i) pc = c - tc.cone_dim;
                    pt[i] = std::polar(mag, phis[pc]);
                    break;
                }
                case VarKind::Conjugate:
                    pt[i] = std::conj(pt[P.registry()->var(i).partner]);
                    break;
            }
        }
        std::vector<std::vector<Cx>> bval(nv, std::vector<Cx>(nv, Cx(0.0)));
        for (const auto& [pair, poly] : P.table()) {
            Cx v = poly.eval(pt);
            bval[pair.first][pair.second] = v;
            bval[pair.second][pair.first] = -v;
        }

        double maxdev = 0.0;
        for (int a = 0; a < nc; ++a) {
            for (int b = a + 1; b < nc; ++b) {
                Cx value(0.0);
                for (int u = 0; u < nv; ++u) {
                    for (int v = 0; v < nv; ++v) {
                        if (bval[u][v] == Cx(0.0)) continue;
                        Cx da = coord_derivative(tc, tc.coords[a], u, t, pt[u]);
                        if (da == Cx(0.0)) continue;
                        Cx db = coord_derivative(tc, tc.coords[b], v, t, pt[v]);
                        if (db == Cx(0.0)) continue;
                        value += da * db * bval[u][v];
                    }
                }
                value *= std::pow(t, s);
                double limit = to_double(cb.matrix[a][b]);
                double dev = std::abs(value - Cx(limit, 0.0));
                maxdev = std::max(maxdev, dev);
                table.rows.push_back(
                    {t, tc.coords[a].name + "," + tc.coords[b].name, value, limit, dev});
            }
        }
        table.max_deviation[t] = maxdev;
    }
    return table;
}

std::string DeviationTable::csv() const {
    std::ostringstream out;
    out << "t,pair,scaled_re,scaled_im,limit,abs_deviation\n";
    for (const auto& r : rows)
        out << r.t << ",\"" << r.pair << "\"," << r.scaled.real() << "," << r.scaled.imag() << ","
            << r.limit << "," << r.deviation << "\n";
    return out.str();
}

std::vector<std::string> casimirs(const ConstantBracket& cb) {
    std::vector<std::string> out;
    int nc = static_cast<int>(cb.coords.coords.size());
    for (int a = 0; a < nc; ++a) {
        bool zero = true;
        for (int b = 0; b < nc; ++b)
            if (cb.matrix[a][b] != 0) zero = false;
        if (zero) out.push_back(cb.coords.coords[a].name);
    }
    return out;
}

LiouvilleReport check_liouville_structure(const ConstantBracket& cb, int n) {
    LiouvilleReport rep;
    auto gen_name = [](int k, int l) {
        return "D" + std::to_string(k) + "_" + std::to_string(l);
    };
    std::vector<int> zetas, phis;
    // higher k first, then smaller l first
    for (int k = n - 1; k >= 1; --k)
        for (int l = 1; l <= k; ++l) {
            std::string base = gen_name(k, l);
            rep.zeta_order.push_back(base);
            zetas.push_back(cb.find_coord((l == k ? "xi:" : "zeta:") + base));
        }
    for (int p = n; p >= 2; --p)
        for (int q = 1; q <= p - 1; ++q) {
            std::string base = gen_name(p, q);
            rep.phi_order.push_back(base);
            phis.push_back(cb.find_coord("phi:" + base));
        }
    int m = static_cast<int>(zetas.size());
    if (m != static_cast<int>(phis.size()))
        throw std::invalid_argument("liouville: shape mismatch for n");

    rep.pairing.assign(m, std::vector<Rational>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) rep.pairing[i][j] = cb.matrix[zetas[i]][phis[j]];

    for (int i = 0; i < m; ++i) {
        if (rep.pairing[i][i] != Rational(-1, 2)) {
            rep.passed = false;
            rep.failures.push_back("diagonal entry " + rep.zeta_order[i] + " is not -1/2");
        }
        for (int j = i + 1; j < m; ++j) {
            if (rep.pairing[i][j] != 0) {
                rep.passed = false;
                rep.failures.push_back("nonzero above diagonal at (" + rep.zeta_order[i] + "," +
                                       rep.phi_order[j] + ")");
            }
        }
    }
    return rep;
}

}  // namespace troplie

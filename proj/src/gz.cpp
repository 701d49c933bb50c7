#include "troplie/gz.hpp"

#include "troplie/rmatrix.hpp"

#include <stdexcept>

namespace troplie {

bool GZPattern::interlacing(bool strict) const {
    auto ok = [&](const Rational& a, const Rational& b) { return strict ? a > b : a >= b; };
    for (int k = 2; k <= n; ++k)
        for (int l = 1; l < k; ++l)
            if (!ok(at(k, l), at(k - 1, l)) || !ok(at(k - 1, l), at(k, l + 1))) return false;
    return true;
}

int zeta_index(int k, int l) { return k * (k - 1) / 2 + (l - 1); }

StrictCone gz_cone(int n) {
    if (n < 1) throw std::invalid_argument("gz_cone needs n >= 1");
    int dim = n * (n + 1) / 2;
    std::vector<std::string> names;
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= k; ++l)
            names.push_back("zeta" + std::to_string(k) + "_" + std::to_string(l));
    StrictCone cone(dim, names);
    for (int k = 2; k <= n; ++k) {
        for (int l = 1; l < k; ++l) {
            IntVec u(dim, 0);
            u[zeta_index(k, l)] += 1;
            if (l >= 2) {
                u[zeta_index(k - 1, l - 1)] += 1;
                u[zeta_index(k, l - 1)] -= 1;
            }
            u[zeta_index(k - 1, l)] -= 1;
            cone.add_normal(u);

            IntVec v(dim, 0);
            v[zeta_index(k, l)] += 1;
            v[zeta_index(k - 1, l)] += 1;
            v[zeta_index(k, l + 1)] -= 1;
            if (l >= 2) v[zeta_index(k - 1, l - 1)] -= 1;
            cone.add_normal(v);
        }
    }
    return cone;
}

ZetaPoint sigma(const GZPattern& lam, bool half) {
    ZetaPoint z;
    z.n = lam.n;
    Rational c = half ? Rational(1, 2) : Rational(1);
    for (int k = 1; k <= lam.n; ++k) {
        Rational sum = 0;
        for (int l = 1; l <= k; ++l) {
            sum += lam.at(k, l);
            z.zeta[{k, l}] = c * sum;
        }
    }
    return z;
}

std::map<std::pair<int, int>, UV> uv_quantities(const ZetaPoint& z) {
    std::map<std::pair<int, int>, UV> out;
    for (int k = 2; k <= z.n; ++k) {
        for (int l = 1; l < k; ++l) {
            UV q;
            q.u = z.at(k, l) + z.at(k - 1, l - 1) - z.at(k, l - 1) - z.at(k - 1, l);
            q.v = z.at(k - 1, l - 1) + z.at(k, l + 1) - z.at(k, l) - z.at(k - 1, l);
            out[{k, l}] = q;
        }
    }
    return out;
}

std::map<std::pair<int, int>, Rational> tropical_gz_map(int n, const std::vector<Rational>& w) {
    PlanarNetwork net = build_gamma_s(n);
    if (w.size() != net.weight_names.size())
        throw std::invalid_argument("tropical_gz_map weight count mismatch");
    std::map<std::pair<int, int>, Rational> out;
    for (int k = 1; k <= n; ++k) {
        // ports of the subnetwork Gamma^(k): the last k sources and sinks
        std::vector<int> ports;
        for (int p = n - k + 1; p <= n; ++p) ports.push_back(p);
        for (int i = 1; i <= k; ++i) {
            // all i-element endpoint choices within the subnetwork
            std::vector<std::vector<int>> choices;
            std::vector<int> cur;
            std::function<void(size_t)> rec = [&](size_t start) {
                if (static_cast<int>(cur.size()) == i) {
                    choices.push_back(cur);
                    return;
                }
                for (size_t x = start; x < ports.size(); ++x) {
                    cur.push_back(ports[x]);
                    rec(x + 1);
                    cur.pop_back();
                }
            };
            rec(0);
            bool any = false;
            Rational best = 0;
            for (const auto& I : choices) {
                for (const auto& J : choices) {
                    for_each_path_system(net, I, J, [&](int, const std::vector<int>& slots) {
                        Rational total = 0;
                        for (int s : slots) total += w[s];
                        if (!any || total > best) best = total;
                        any = true;
                    });
                }
            }
            if (!any) throw std::logic_error("no path system in the subnetwork");
            out[{k, i}] = best;
        }
    }
    return out;
}

std::vector<int> distinguished_system(int n, int k, int i) {
    PlanarNetwork net = build_gamma_s(n);
    std::vector<std::vector<int>> systems;
    for_each_path_system(net, delta_rows(n, k, i), delta_cols(n, i),
                         [&](int, const std::vector<int>& slots) { systems.push_back(slots); });
    if (systems.size() != 1)
        throw std::logic_error("solid minor path system is not unique on the staircase");
    std::sort(systems[0].begin(), systems[0].end());
    return systems[0];
}

Rational face_weight(int n, const std::vector<Rational>& w, int i, int j) {
    if (i < 1 || i >= n || j < 1 || j > n - i + 1)
        throw std::invalid_argument("face index out of range");
    // word position of the j-th slant of type i
    auto pos = [&](int jj) {
        int offset = 0;
        for (int r = 1; r < jj; ++r) offset += n - r;
        return offset + i;
    };
    int nslants = n * (n - 1) / 2;
    Rational omega = 0;
    if (j <= n - i) omega += w.at(pos(j) - 1);       // right boundary slant
    if (j >= 2) omega -= w.at(pos(j - 1) - 1);       // left boundary slant
    if (j == n - i + 1) omega += w.at(nslants + i - 1) - w.at(nslants + i);  // d_i - d_{i+1}
    return omega;
}

RegionWeights region_weights(int n, const std::vector<Rational>& w) {
    RegionWeights out;
    for (int k = 2; k <= n; ++k) {
        for (int l = 1; l < k; ++l) {
            Rational plus = 0;
            for (int j = 0; j < l; ++j) plus += face_weight(n, w, n - k + 1 + j, l - j);
            Rational minus = 0;
            for (int i = n - k + 1; i <= n - l; ++i) minus += face_weight(n, w, i, l + 1);
            out.plus[{k, l}] = plus;
            out.minus[{k, l}] = minus;
        }
    }
    return out;
}

bool principal_chamber_test(int n, const std::vector<Rational>& w) {
    RegionWeights rw = region_weights(n, w);
    for (const auto& [kl, x] : rw.plus)
        if (!(x > 0)) return false;
    for (const auto& [kl, x] : rw.minus)
        if (!(x < 0)) return false;
    return true;
}

StrictCone principal_chamber_cone(int n) {
    int dim = n * (n + 1) / 2;
    PlanarNetwork net = build_gamma_s(n);
    StrictCone cone(dim, net.weight_names);
    // the region functionals are linear: read off coefficients on unit
    // weight vectors
    std::vector<RegionWeights> unit;
    for (int e = 0; e < dim; ++e) {
        std::vector<Rational> w(dim, Rational(0));
        w[e] = 1;
        unit.push_back(region_weights(n, w));
    }
    for (int k = 2; k <= n; ++k) {
        for (int l = 1; l < k; ++l) {
            IntVec plus(dim), minus(dim);
            for (int e = 0; e < dim; ++e) {
                plus[e] = Integer(numerator(unit[e].plus.at({k, l})));
                minus[e] = -Integer(numerator(unit[e].minus.at({k, l})));
            }
            cone.add_normal(plus);
            cone.add_normal(minus);
        }
    }
    return cone;
}

}  // namespace troplie

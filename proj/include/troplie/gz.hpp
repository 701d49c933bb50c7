#pragma once

#include "troplie/cone.hpp"
#include "troplie/networks.hpp"

#include <map>
#include <utility>

namespace troplie {

/// Triangular array lambda^(k)_l, 1 <= l <= k <= n.
struct GZPattern {
    int n = 0;
    std::map<std::pair<int, int>, Rational> lam;

    const Rational& at(int k, int l) const { return lam.at({k, l}); }
    /// Interlacing lambda^(k)_l >= lambda^(k-1)_l >= lambda^(k)_{l+1}
    /// (strict variant with >).
    bool interlacing(bool strict) const;
};

/// Partial sums zeta^(k)_l, with zeta^(k)_0 = 0 implicit.
struct ZetaPoint {
    int n = 0;
    std::map<std::pair<int, int>, Rational> zeta;

    Rational at(int k, int l) const { return l == 0 ? Rational(0) : zeta.at({k, l}); }
};

/// Rhombus cone over zeta^(k)_l in lex (k, l) order: for k = 2..n,
/// l = 1..k-1, zeta^(k)_l + zeta^(k-1)_{l-1} > zeta^(k)_{l-1} + zeta^(k-1)_l
/// and zeta^(k)_l + zeta^(k-1)_l > zeta^(k)_{l+1} + zeta^(k-1)_{l-1}.
StrictCone gz_cone(int n);

/// Index of zeta^(k)_l in the lex (k, l) coordinate order.
int zeta_index(int k, int l);

/// zeta^(k)_l = c (lambda^(k)_1 + ... + lambda^(k)_l), c = 1 or 1/2.
ZetaPoint sigma(const GZPattern& lam, bool half);

struct UV {
    Rational u, v;
};

/// u^(k)_l = zeta^(k)_l + zeta^(k-1)_{l-1} - zeta^(k)_{l-1} - zeta^(k-1)_l,
/// v^(k)_l = zeta^(k-1)_{l-1} + zeta^(k)_{l+1} - zeta^(k)_l - zeta^(k-1)_l,
/// for k = 2..n, l = 1..k-1.
std::map<std::pair<int, int>, UV> uv_quantities(const ZetaPoint& z);

/// l^(k)_i = max total weight over systems of i vertex-disjoint
/// source-to-sink paths inside the subnetwork Gamma^(k) (the last k
/// sources/sinks of Gamma_s(n)), endpoints unrestricted. One weight per
/// slot of build_gamma_s(n).
std::map<std::pair<int, int>, Rational> tropical_gz_map(int n, const std::vector<Rational>& w);

/// Weight slots of the unique path system realizing the monomial
/// Delta^(k)_i on the staircase network (the distinguished multi-path).
std::vector<int> distinguished_system(int n, int k, int i);

/// Signed boundary weight of face j (counted left to right, j = 1..n-i+1)
/// in the band between wires i and i+1: edges above or right count +1,
/// edges below or left count -1.
Rational face_weight(int n, const std::vector<Rational>& w, int i, int j);

/// Summed face weights of the regions alpha^+_{k,l} and alpha^-_{k,l},
/// k = 2..n, l = 1..k-1.
struct RegionWeights {
    std::map<std::pair<int, int>, Rational> plus, minus;
};
RegionWeights region_weights(int n, const std::vector<Rational>& w);

/// Principal linearity chamber: every alpha^+ region weight positive and
/// every alpha^- region weight negative.
bool principal_chamber_test(int n, const std::vector<Rational>& w);

/// The principal-chamber inequalities as a cone in weight space (one
/// coordinate per slot of build_gamma_s(n)).
StrictCone principal_chamber_cone(int n);

}  // namespace troplie

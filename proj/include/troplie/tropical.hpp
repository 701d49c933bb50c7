#pragma once

#include "troplie/cone.hpp"
#include "troplie/poisson.hpp"

namespace troplie {

/// Limit coordinates of a registry: one xi per real variable and one
/// (zeta, phi) pair per complex variable. The cone lives over the xi/zeta
/// coordinates in registry order; phi coordinates follow.
struct TropicalCoordinates {
    enum class Kind { Xi, Zeta, Phi };
    struct Coord {
        Kind kind;
        int var;  // registry index of the underlying variable (z, not ~z)
        std::string name;
    };

    RegistryPtr reg;
    std::vector<Coord> coords;       // cone coords first, then phi coords
    int cone_dim = 0;
    std::vector<int> cone_coord_of;  // var index -> cone coordinate, z and ~z shared

    static TropicalCoordinates of(RegistryPtr reg);
    bool is_complex_case() const { return cone_dim < static_cast<int>(coords.size()); }
    std::vector<std::string> cone_names() const;
};

/// The cone C(pi; x): one normal n_{u,v} - n(I,J,K) per support monomial of
/// each remainder p_{u,v}. z and ~z exponents both land on zeta, and a
/// self-pair (z_a, ~z_a) contributes +2 on zeta_a to the left side.
StrictCone tropical_cone(const PoissonStructure& P);

struct ConstantBracket {
    TropicalCoordinates coords;
    std::vector<std::vector<Rational>> matrix;  // antisymmetric, coords x coords

    const Rational& entry(int a, int b) const { return matrix[a][b]; }
    int find_coord(const std::string& name) const;
};

/// pi_infinity: real case {xi_i, xi_j} = pi_ij; complex case {xi_i, phi_a} =
/// Im pi_{i,a} and {zeta_a, phi_b} = 1/2 Im(pi_{a,b} - pi_{a,~b}), all other
/// blocks zero. Complex case requires the reality conditions.
ConstantBracket constant_bracket(const PoissonStructure& P);

struct DeviationRow {
    double t;
    std::string pair;
    std::complex<double> scaled;
    double limit;
    double deviation;
};

struct DeviationTable {
    std::vector<DeviationRow> rows;
    std::map<double, double> max_deviation;  // per t
    std::string csv() const;
};

/// Evaluates the rescaled bracket (t^2 in the all-real case, t in the
/// complex case) of every limit-coordinate pair at x = e^{t eta},
/// z = e^{t eta + i phi} and reports deviations from pi_infinity.
/// eta must sit in the cone with slack >= 1.
DeviationTable limit_sample(const PoissonStructure& P, const std::vector<Rational>& eta,
                            const std::vector<double>& phis, const std::vector<double>& ts);

/// Coordinates whose bracket row vanishes identically.
std::vector<std::string> casimirs(const ConstantBracket& cb);

struct LiouvilleReport {
    bool passed = true;
    std::vector<std::string> zeta_order;
    std::vector<std::string> phi_order;
    std::vector<std::vector<Rational>> pairing;
    std::vector<std::string> failures;
};

/// For the G*-shaped bracket of size n: orders zeta^(k)_l (k = 1..n-1) and
/// phi^(p)_q (p = 2..n) with higher k/p first and smaller l/q first, and
/// asserts the pairing matrix is lower triangular with diagonal -1/2.
LiouvilleReport check_liouville_structure(const ConstantBracket& cb, int n);

}  // namespace troplie

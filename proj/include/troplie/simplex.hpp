#pragma once

#include "troplie/rational.hpp"

#include <optional>
#include <vector>

namespace troplie {

/// Dense rational simplex with Bland's anti-cycling rule. Small problems
/// only; everything is exact.
///
/// Constraints are rows a.x >= / <= / == rhs over free variables x.
/// Internally variables are split into positive and negative parts.
class SimplexSolver {
  public:
    enum class Rel { Ge, Le, Eq };

    struct Row {
        std::vector<Rational> coeffs;
        Rel rel;
        Rational rhs;
    };

    explicit SimplexSolver(int nvars) : nvars_(nvars) {}

    void add_row(std::vector<Rational> coeffs, Rel rel, Rational rhs);

    /// Phase-1 feasibility. Returns a feasible point or nullopt.
    std::optional<std::vector<Rational>> feasible_point() const;

    /// Maximizes objective.x over the feasible region. Returns nullopt when
    /// infeasible; throws std::runtime_error when unbounded.
    std::optional<std::vector<Rational>> maximize(const std::vector<Rational>& objective) const;

  private:
    int nvars_;
    std::vector<Row> rows_;
};

}  // namespace troplie

#pragma once

#include "troplie/laurent.hpp"

#include <map>
#include <utility>

namespace troplie {

/// Bracket table over the registry generators. Entries are stored for pairs
/// (u, v) with u < v in registry order; the opposite orientation is served
/// as the negation and diagonal brackets are identically zero.
class PoissonStructure {
  public:
    explicit PoissonStructure(RegistryPtr reg) : reg_(std::move(reg)) {}

    const RegistryPtr& registry() const { return reg_; }

    void set_bracket(int u, int v, LaurentPoly p);
    /// {u, v} with orientation handled; zero when absent or u == v.
    LaurentPoly bracket(int u, int v) const;

    const std::map<std::pair<int, int>, LaurentPoly>& table() const { return table_; }

  private:
    RegistryPtr reg_;
    std::map<std::pair<int, int>, LaurentPoly> table_;
};

/// Exact split {u,v} = pi * uv + remainder where the remainder carries no
/// uv monomial.
struct LogCanonicalPart {
    std::map<std::pair<int, int>, GaussianRational> pi;
    std::map<std::pair<int, int>, LaurentPoly> remainder;
};

LogCanonicalPart split_log_canonical(const PoissonStructure& P);

/// The log-canonical coefficient of a pair in either orientation (pairs not
/// stored count as zero).
GaussianRational log_canonical_coeff(const PoissonStructure& P, int u, int v);

struct RealityReport {
    bool passed = true;
    std::vector<std::string> failures;
    void fail(std::string what) {
        passed = false;
        failures.push_back(std::move(what));
    }
};

/// Checks bivector reality ({~z_a, ~z_b} = conj{z_a, z_b} etc.) and the
/// log-canonical conditions pi_{ij} = 0, Re pi_{i,a} = Re pi_{a,b} =
/// Re pi_{a,~b} = 0.
RealityReport check_reality(const PoissonStructure& P);

/// Bracket of a generator against a Laurent polynomial, extended by the
/// Leibniz rule {u, x^I} = sum_j I_j x^{I - e_j} {u, x_j}.
LaurentPoly bracket_leibniz(const PoissonStructure& P, int u, const LaurentPoly& p);

/// Full bilinear extension {a, b} = sum_u (da/du) {u, b}.
LaurentPoly poisson_bracket(const PoissonStructure& P, const LaurentPoly& a,
                            const LaurentPoly& b);

/// {u,{v,w}} + {v,{w,u}} + {w,{u,v}} for distinct generators.
LaurentPoly jacobiator(const PoissonStructure& P, int u, int v, int w);

}  // namespace troplie

#pragma once

#include "troplie/registry.hpp"

#include <complex>
#include <map>
#include <vector>

namespace troplie {

/// Laurent polynomial over Gaussian rationals: finitely supported map from
/// exponent vectors to nonzero coefficients. Immutable in spirit; arithmetic
/// returns fresh values. Terms are kept in lexicographic monomial order so
/// printing and iteration are deterministic.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(RegistryPtr reg) : reg_(std::move(reg)) {}

    static LaurentPoly zero(RegistryPtr reg) { return LaurentPoly(std::move(reg)); }
    static LaurentPoly constant(RegistryPtr reg, GaussianRational c);
    static LaurentPoly variable(RegistryPtr reg, int var, int exp = 1);
    static LaurentPoly monomial(RegistryPtr reg, Monomial m, GaussianRational c);

    const RegistryPtr& registry() const { return reg_; }
    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int nvars() const { return reg_ ? reg_->size() : 0; }

    GaussianRational coeff(const Monomial& m) const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const GaussianRational& c) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Conjugates coefficients and swaps exponents between conjugate pairs.
    LaurentPoly conj() const;

    /// Replaces var by coeff * mono throughout. mono must not involve var and
    /// coeff must be nonzero (negative exponents invert it).
    LaurentPoly substitute(int var, const Monomial& mono, const GaussianRational& coeff) const;

    /// Formal partial derivative in one registry variable.
    LaurentPoly derivative(int var) const;

    /// Numeric evaluation; every variable value must be nonzero.
    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

    void add_term(const Monomial& m, const GaussianRational& c);

    std::string str() const;

  private:
    RegistryPtr reg_;
    std::map<Monomial, GaussianRational> terms_;
    void check_same_registry(const LaurentPoly& other) const;
};

}  // namespace troplie

#pragma once

#include "troplie/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace troplie {

enum class VarKind { RealPositive, Complex, Conjugate };

struct VarInfo {
    std::string name;
    VarKind kind = VarKind::RealPositive;
    int partner = -1;  // conjugate partner index for Complex/Conjugate
};

/// Ordered variable registry. Complex variables always travel with their
/// conjugate partner, named by prefixing "~".
class VarRegistry {
  public:
    int add_real(const std::string& name);
    /// Adds z and ~z; returns the index of z.
    int add_complex_pair(const std::string& name);

    int size() const { return static_cast<int>(vars_.size()); }
    const VarInfo& var(int i) const { return vars_.at(i); }
    const std::string& name(int i) const { return vars_.at(i).name; }
    bool is_real(int i) const { return vars_.at(i).kind == VarKind::RealPositive; }
    /// Identity on real variables, partner on complex ones.
    int conj_index(int i) const;

    /// Index of a named variable, -1 if absent.
    int find(const std::string& name) const;
    int index_of(const std::string& name) const;  // throws if absent

    friend bool operator==(const VarRegistry& a, const VarRegistry& b);
    friend bool operator!=(const VarRegistry& a, const VarRegistry& b) { return !(a == b); }

  private:
    std::vector<VarInfo> vars_;
    std::map<std::string, int> index_;
    void insert(VarInfo v);
};

using RegistryPtr = std::shared_ptr<const VarRegistry>;

/// Dense exponent vector sized by the registry.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(int nvars) : exps(nvars, 0) {}

    static Monomial unit(int nvars) { return Monomial(nvars); }
    static Monomial of_var(int nvars, int var, int e = 1) {
        Monomial m(nvars);
        m.exps[var] = e;
        return m;
    }

    bool is_unit() const {
        for (int e : exps)
            if (e != 0) return false;
        return true;
    }

    friend Monomial operator+(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
        return r;
    }
    friend Monomial operator-(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] -= b.exps[i];
        return r;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps < b.exps; }
};

}  // namespace troplie

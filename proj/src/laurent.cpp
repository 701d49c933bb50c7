#include "troplie/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace troplie {

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("nonpositive denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + s + "'");
    }
}

GaussianRational GaussianRational::pow(long e) const {
    GaussianRational base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    GaussianRational acc(1);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::string to_string(const GaussianRational& c) {
    if (c.im == 0) return to_string(c.re);
    std::string im = to_string(c.im) + "i";
    if (c.re == 0) return im;
    if (c.im > 0) return to_string(c.re) + "+" + im;
    return to_string(c.re) + im;
}

int VarRegistry::add_real(const std::string& name) {
    insert({name, VarKind::RealPositive, -1});
    return size() - 1;
}

int VarRegistry::add_complex_pair(const std::string& name) {
    int z = size();
    insert({name, VarKind::Complex, z + 1});
    insert({"~" + name, VarKind::Conjugate, z});
    return z;
}

void VarRegistry::insert(VarInfo v) {
    if (index_.count(v.name)) throw std::invalid_argument("duplicate variable name " + v.name);
    index_[v.name] = size();
    vars_.push_back(std::move(v));
}

int VarRegistry::conj_index(int i) const {
    const VarInfo& v = vars_.at(i);
    return v.kind == VarKind::RealPositive ? i : v.partner;
}

int VarRegistry::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int VarRegistry::index_of(const std::string& name) const {
    int i = find(name);
    if (i < 0) throw std::invalid_argument("unknown variable " + name);
    return i;
}

bool operator==(const VarRegistry& a, const VarRegistry& b) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i) {
        if (a.vars_[i].name != b.vars_[i].name || a.vars_[i].kind != b.vars_[i].kind ||
            a.vars_[i].partner != b.vars_[i].partner)
            return false;
    }
    return true;
}

LaurentPoly LaurentPoly::constant(RegistryPtr reg, GaussianRational c) {
    LaurentPoly p(std::move(reg));
    p.add_term(Monomial::unit(p.nvars()), c);
    return p;
}

LaurentPoly LaurentPoly::variable(RegistryPtr reg, int var, int exp) {
    LaurentPoly p(std::move(reg));
    p.add_term(Monomial::of_var(p.nvars(), var, exp), GaussianRational(1));
    return p;
}

LaurentPoly LaurentPoly::monomial(RegistryPtr reg, Monomial m, GaussianRational c) {
    LaurentPoly p(std::move(reg));
    p.add_term(m, c);
    return p;
}

GaussianRational LaurentPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LaurentPoly::check_same_registry(const LaurentPoly& other) const {
    if (!reg_ || !other.reg_ || (reg_ != other.reg_ && *reg_ != *other.reg_))
        throw std::invalid_argument("Laurent polynomial registry mismatch");
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_registry(b);
    LaurentPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_registry(b);
    LaurentPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r(a.reg_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_registry(b);
    LaurentPoly r(a.reg_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const GaussianRational& c) const {
    LaurentPoly r(reg_);
    if (c.is_zero()) return r;
    for (const auto& [m, t] : terms_) r.terms_.emplace(m, t * c);
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::conj() const {
    LaurentPoly r(reg_);
    for (const auto& [m, c] : terms_) {
        Monomial cm(nvars());
        for (int i = 0; i < nvars(); ++i) cm.exps[reg_->conj_index(i)] = m.exps[i];
        r.add_term(cm, c.conj());
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(int var, const Monomial& mono,
                                    const GaussianRational& coeff) const {
    if (coeff.is_zero()) throw std::invalid_argument("substitute: zero coefficient");
    if (mono.exps.at(var) != 0) throw std::invalid_argument("substitute: circular substitution");
    LaurentPoly r(reg_);
    for (const auto& [m, c] : terms_) {
        int e = m.exps[var];
        Monomial nm = m;
        nm.exps[var] = 0;
        for (size_t i = 0; i < nm.exps.size(); ++i) nm.exps[i] += e * mono.exps[i];
        r.add_term(nm, c * coeff.pow(e));
    }
    return r;
}

LaurentPoly LaurentPoly::derivative(int var) const {
    LaurentPoly r(reg_);
    for (const auto& [m, c] : terms_) {
        int e = m.exps[var];
        if (e == 0) continue;
        Monomial nm = m;
        nm.exps[var] -= 1;
        r.add_term(nm, c * GaussianRational(e));
    }
    return r;
}

std::complex<double> LaurentPoly::eval(const std::vector<std::complex<double>>& point) const {
    if (static_cast<int>(point.size()) != nvars())
        throw std::invalid_argument("eval: wrong point dimension");
    for (const auto& v : point)
        if (v == std::complex<double>(0.0)) throw std::domain_error("eval: zero variable value");
    std::complex<double> total = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (int i = 0; i < nvars(); ++i) {
            int e = m.exps[i];
            if (e != 0) t *= std::pow(point[i], e);
        }
        total += t;
    }
    return total;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << to_string(c) << ")";
        for (int i = 0; i < nvars(); ++i) {
            if (m.exps[i] == 0) continue;
            out << "*" << reg_->name(i);
            if (m.exps[i] != 1) out << "^" << m.exps[i];
        }
    }
    return out.str();
}

}  // namespace troplie

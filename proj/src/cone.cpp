#include "troplie/cone.hpp"

#include "troplie/simplex.hpp"

#include <stdexcept>

namespace troplie {

IntVec primitivize(IntVec v) {
    Integer g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

void StrictCone::add_normal(IntVec n) {
    if (static_cast<int>(n.size()) != dim)
        throw std::invalid_argument("normal dimension mismatch");
    bool zero = true;
    for (const auto& x : n)
        if (x != 0) zero = false;
    if (zero) throw std::invalid_argument("zero normal");
    normals.insert(primitivize(std::move(n)));
}

StrictCone cone_intersect(const StrictCone& a, const StrictCone& b) {
    if (a.dim != b.dim) throw std::invalid_argument("cone dimension mismatch");
    StrictCone r = a;
    for (const auto& n : b.normals) r.normals.insert(n);
    return r;
}

namespace {

std::vector<Rational> to_rat(const IntVec& v) {
    std::vector<Rational> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

// Strict homogeneous feasibility via the ">= 1" normalization.
void add_cone_rows(SimplexSolver& lp, const StrictCone& c) {
    for (const auto& n : c.normals) lp.add_row(to_rat(n), SimplexSolver::Rel::Ge, Rational(1));
}

}  // namespace

bool cone_is_empty(const StrictCone& c) {
    if (c.normals.empty()) return false;
    SimplexSolver lp(c.dim);
    add_cone_rows(lp, c);
    return !lp.feasible_point().has_value();
}

bool cone_implies(const StrictCone& c, const IntVec& m) {
    if (static_cast<int>(m.size()) != c.dim)
        throw std::invalid_argument("cone_implies dimension mismatch");
    SimplexSolver lp(c.dim);
    add_cone_rows(lp, c);
    lp.add_row(to_rat(m), SimplexSolver::Rel::Le, Rational(0));
    return !lp.feasible_point().has_value();
}

bool cone_equal(const StrictCone& a, const StrictCone& b) {
    if (a.dim != b.dim) throw std::invalid_argument("cone dimension mismatch");
    if (cone_is_empty(a) || cone_is_empty(b))
        throw std::invalid_argument("cone_equal on empty cone");
    for (const auto& n : b.normals)
        if (!cone_implies(a, n)) return false;
    for (const auto& n : a.normals)
        if (!cone_implies(b, n)) return false;
    return true;
}

StrictCone cone_remove_redundant(const StrictCone& c) {
    if (cone_is_empty(c)) throw std::invalid_argument("cone_remove_redundant on empty cone");
    StrictCone r(c.dim, c.coords);
    r.normals = c.normals;
    for (const auto& n : c.normals) {
        StrictCone rest(c.dim);
        for (const auto& m : r.normals)
            if (m != n) rest.normals.insert(m);
        bool implied = !rest.normals.empty() ? cone_implies(rest, n) : false;
        if (implied) r.normals.erase(n);
    }
    return r;
}

std::vector<Rational> cone_interior_sample(const StrictCone& c) {
    if (c.normals.empty()) return std::vector<Rational>(c.dim, Rational(0));
    if (cone_is_empty(c)) throw std::invalid_argument("interior sample of empty cone");
    for (Integer box = 2;; box *= 2) {
        // max s  s.t.  <n, eta> - s >= 1,  -box <= eta <= box, s >= 0.
        SimplexSolver lp(c.dim + 1);
        for (const auto& n : c.normals) {
            auto row = to_rat(n);
            row.push_back(Rational(-1));
            lp.add_row(std::move(row), SimplexSolver::Rel::Ge, Rational(1));
        }
        for (int j = 0; j < c.dim; ++j) {
            std::vector<Rational> lo(c.dim + 1, Rational(0)), hi(c.dim + 1, Rational(0));
            lo[j] = 1;
            hi[j] = 1;
            lp.add_row(std::move(lo), SimplexSolver::Rel::Ge, Rational(-box));
            lp.add_row(std::move(hi), SimplexSolver::Rel::Le, Rational(box));
        }
        {
            std::vector<Rational> s(c.dim + 1, Rational(0));
            s[c.dim] = 1;
            lp.add_row(std::move(s), SimplexSolver::Rel::Ge, Rational(0));
        }
        std::vector<Rational> obj(c.dim + 1, Rational(0));
        obj[c.dim] = 1;
        auto sol = lp.maximize(obj);
        if (!sol) continue;
        sol->pop_back();
        return *sol;
    }
}

}  // namespace troplie

#include "troplie/simplex.hpp"

#include <stdexcept>

namespace troplie {

namespace {

// Standard-form tableau: A y = b, y >= 0, b >= 0, min c.y.
struct Tableau {
    int m, n;
    std::vector<std::vector<Rational>> a;  // m x n
    std::vector<Rational> b;               // m
    std::vector<int> basis;                // m, column indices

    void pivot(int r, int j) {
        Rational p = a[r][j];
        for (int k = 0; k < n; ++k) a[r][k] /= p;
        b[r] /= p;
        for (int i = 0; i < m; ++i) {
            if (i == r || a[i][j] == 0) continue;
            Rational f = a[i][j];
            for (int k = 0; k < n; ++k) a[i][k] -= f * a[r][k];
            b[i] -= f * b[r];
        }
        basis[r] = j;
    }

    // Minimizes c.y with Bland's rule from the current basic feasible point.
    // Only columns below ncols may enter (phase 2 locks out artificials).
    // Returns false when unbounded.
    bool minimize(const std::vector<Rational>& c, int ncols = -1) {
        if (ncols < 0) ncols = n;
        for (;;) {
            // Reduced costs rc_j = c_j - sum_i c_basis[i] * a[i][j].
            std::vector<Rational> cb(m);
            for (int i = 0; i < m; ++i) cb[i] = c[basis[i]];
            int enter = -1;
            for (int j = 0; j < ncols && enter < 0; ++j) {
                Rational rc = c[j];
                for (int i = 0; i < m; ++i)
                    if (a[i][j] != 0) rc -= cb[i] * a[i][j];
                if (rc < 0) enter = j;
            }
            if (enter < 0) return true;  // optimal
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (a[i][enter] <= 0) continue;
                Rational ratio = b[i] / a[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;  // unbounded
            pivot(leave, enter);
        }
    }

    Rational objective(const std::vector<Rational>& c) const {
        Rational v = 0;
        for (int i = 0; i < m; ++i) v += c[basis[i]] * b[i];
        return v;
    }
};

}  // namespace

void SimplexSolver::add_row(std::vector<Rational> coeffs, Rel rel, Rational rhs) {
    if (static_cast<int>(coeffs.size()) != nvars_)
        throw std::invalid_argument("simplex row dimension mismatch");
    rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

// Builds the phase-1 tableau: structural columns are the split x = u - v,
// one slack per inequality, one artificial per row.
namespace {

struct Problem {
    Tableau t;
    int nstruct;  // 2 * nvars
    int nslack;
    int nart;
};

Problem build(int nvars, const std::vector<SimplexSolver::Row>& rows) {
    int m = static_cast<int>(rows.size());
    int nslack = 0;
    for (const auto& r : rows)
        if (r.rel != SimplexSolver::Rel::Eq) ++nslack;
    Problem p;
    p.nstruct = 2 * nvars;
    p.nslack = nslack;
    p.nart = m;
    p.t.m = m;
    p.t.n = p.nstruct + nslack + m;
    p.t.a.assign(m, std::vector<Rational>(p.t.n, Rational(0)));
    p.t.b.assign(m, Rational(0));
    p.t.basis.assign(m, 0);
    int slack = 0;
    for (int i = 0; i < m; ++i) {
        int sign = rows[i].rhs < 0 ? -1 : 1;
        for (int j = 0; j < nvars; ++j) {
            Rational c = rows[i].coeffs[j] * sign;
            p.t.a[i][2 * j] = c;
            p.t.a[i][2 * j + 1] = -c;
        }
        p.t.b[i] = rows[i].rhs * sign;
        if (rows[i].rel != SimplexSolver::Rel::Eq) {
            int s = rows[i].rel == SimplexSolver::Rel::Ge ? -1 : 1;
            p.t.a[i][p.nstruct + slack] = Rational(s * sign);
            ++slack;
        }
        p.t.a[i][p.nstruct + nslack + i] = 1;
        p.t.basis[i] = p.nstruct + nslack + i;
    }
    return p;
}

// Runs phase 1; returns true when a feasible basis without artificial value
// remains. Artificials left basic at level zero are pivoted out or their
// rows ignored (redundant rows).
bool phase1(Problem& p) {
    std::vector<Rational> c(p.t.n, Rational(0));
    for (int j = p.nstruct + p.nslack; j < p.t.n; ++j) c[j] = 1;
    p.t.minimize(c);  // bounded below by zero, cannot be unbounded
    if (p.t.objective(c) != 0) return false;
    for (int i = 0; i < p.t.m; ++i) {
        if (p.t.basis[i] < p.nstruct + p.nslack) continue;
        for (int j = 0; j < p.nstruct + p.nslack; ++j) {
            if (p.t.a[i][j] != 0) {
                p.t.pivot(i, j);
                break;
            }
        }
    }
    return true;
}

std::vector<Rational> extract(const Problem& p, int nvars) {
    std::vector<Rational> y(p.t.n, Rational(0));
    for (int i = 0; i < p.t.m; ++i) y[p.t.basis[i]] = p.t.b[i];
    std::vector<Rational> x(nvars);
    for (int j = 0; j < nvars; ++j) x[j] = y[2 * j] - y[2 * j + 1];
    return x;
}

}  // namespace

std::optional<std::vector<Rational>> SimplexSolver::feasible_point() const {
    Problem p = build(nvars_, rows_);
    if (!phase1(p)) return std::nullopt;
    return extract(p, nvars_);
}

std::optional<std::vector<Rational>> SimplexSolver::maximize(
    const std::vector<Rational>& objective) const {
    if (static_cast<int>(objective.size()) != nvars_)
        throw std::invalid_argument("simplex objective dimension mismatch");
    Problem p = build(nvars_, rows_);
    if (!phase1(p)) return std::nullopt;
    std::vector<Rational> c(p.t.n, Rational(0));
    for (int j = 0; j < nvars_; ++j) {
        c[2 * j] = -objective[j];
        c[2 * j + 1] = objective[j];
    }
    if (!p.t.minimize(c, p.nstruct + p.nslack))
        throw std::runtime_error("simplex: unbounded objective");
    return extract(p, nvars_);
}

}  // namespace troplie

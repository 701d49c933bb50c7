#include "troplie/rmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace troplie {

MinorSymbol::MinorSymbol(Tag t, std::vector<int> r, std::vector<int> c)
    : tag(t), rows(std::move(r)), cols(std::move(c)) {
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    if (rows.size() != cols.size())
        throw std::invalid_argument("minor symbol needs |I| = |J|");
    if (std::adjacent_find(rows.begin(), rows.end()) != rows.end() ||
        std::adjacent_find(cols.begin(), cols.end()) != cols.end())
        throw std::invalid_argument("minor symbol index sets must be duplicate-free");
}

std::string MinorSymbol::str() const {
    std::ostringstream out;
    out << (tag == Tag::G ? "g" : "finv") << "_{";
    for (size_t i = 0; i < rows.size(); ++i) out << (i ? "," : "") << rows[i];
    out << "}{";
    for (size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "}";
    return out.str();
}

MinorExpression MinorExpression::term(std::vector<MinorSymbol> symbols, GaussianRational c) {
    MinorExpression e;
    e.add(std::move(symbols), c);
    return e;
}

void MinorExpression::add(std::vector<MinorSymbol> symbols, const GaussianRational& c) {
    if (c.is_zero()) return;
    std::sort(symbols.begin(), symbols.end());
    auto [it, inserted] = terms_.emplace(std::move(symbols), c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MinorExpression operator+(const MinorExpression& a, const MinorExpression& b) {
    MinorExpression r = a;
    for (const auto& [s, c] : b.terms_) r.add(s, c);
    return r;
}

MinorExpression operator-(const MinorExpression& a, const MinorExpression& b) {
    MinorExpression r = a;
    for (const auto& [s, c] : b.terms_) r.add(s, -c);
    return r;
}

MinorExpression MinorExpression::scaled(const GaussianRational& c) const {
    MinorExpression r;
    if (c.is_zero()) return r;
    for (const auto& [s, k] : terms_) r.terms_.emplace(s, k * c);
    return r;
}

std::string MinorExpression::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << to_string(c) << ")";
        for (const auto& sym : s) out << "*" << sym.str();
    }
    return out.str();
}

std::vector<int> sigma_subst(const std::vector<int>& set, int u, int v, bool& vanishes,
                             int& sign) {
    vanishes = std::find(set.begin(), set.end(), v) != set.end();
    int between = 0;
    std::vector<int> out;
    for (int x : set) {
        if (x == u) continue;
        out.push_back(x);
        if (x > std::min(u, v) && x < std::max(u, v)) ++between;
    }
    out.push_back(v);
    std::sort(out.begin(), out.end());
    sign = between % 2 == 0 ? 1 : -1;
    return out;
}

namespace {

bool contains(const std::vector<int>& s, int x) {
    return std::find(s.begin(), s.end(), x) != s.end();
}

}  // namespace

MinorExpression bracket_rprime_left(const MinorSymbol& L, const MinorSymbol& M, int n) {
    MinorExpression out;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (!contains(L.rows, u) || !contains(M.rows, v)) continue;
            bool van1 = false, van2 = false;
            int s1 = 1, s2 = 1;
            auto li = sigma_subst(L.rows, u, v, van1, s1);
            auto mi = sigma_subst(M.rows, v, u, van2, s2);
            if (van1 || van2) continue;
            out.add({MinorSymbol(L.tag, li, L.cols), MinorSymbol(M.tag, mi, M.cols)},
                    GaussianRational(s1 * s2));
        }
    }
    return out;
}

MinorExpression bracket_rprime_right(const MinorSymbol& L, const MinorSymbol& M, int n) {
    MinorExpression out;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (!contains(L.cols, v) || !contains(M.cols, u)) continue;
            bool van1 = false, van2 = false;
            int s1 = 1, s2 = 1;
            auto lj = sigma_subst(L.cols, v, u, van1, s1);
            auto mt = sigma_subst(M.cols, u, v, van2, s2);
            if (van1 || van2) continue;
            out.add({MinorSymbol(L.tag, L.rows, lj), MinorSymbol(M.tag, M.rows, mt)},
                    GaussianRational(s1 * s2));
        }
    }
    return out;
}

MinorExpression bracket_rprime_mid(const MinorSymbol& L, const MinorSymbol& M, int n) {
    MinorExpression out;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (!contains(L.cols, v) || !contains(M.rows, v)) continue;
            bool van1 = false, van2 = false;
            int s1 = 1, s2 = 1;
            auto lj = sigma_subst(L.cols, v, u, van1, s1);
            auto ms = sigma_subst(M.rows, v, u, van2, s2);
            if (van1 || van2) continue;
            out.add({MinorSymbol(L.tag, L.rows, lj), MinorSymbol(M.tag, ms, M.cols)},
                    GaussianRational(s1 * s2));
        }
    }
    return out;
}

MinorExpression bracket_r0(const MinorSymbol& L, const MinorSymbol& M, R0Side side) {
    int count = 0;
    switch (side) {
        case R0Side::LeftLeft:
            count = setcap(L.rows, M.rows);
            break;
        case R0Side::RightRight:
            count = setcap(L.cols, M.cols);
            break;
        case R0Side::Middle:
            count = setcap(L.cols, M.rows);
            break;
    }
    return MinorExpression::term({L, M}, GaussianRational(Rational(count, 2)));
}

MinorExpression bracket_commutator(const MinorSymbol& L, const MinorSymbol& M, int n) {
    if (L.tag != M.tag) throw std::invalid_argument("commutator bracket needs matching tags");
    MinorExpression scalar = MinorExpression::term(
        {L, M},
        GaussianRational(Rational(setcap(L.rows, M.rows) - setcap(L.cols, M.cols), 2)));
    return bracket_rprime_left(L, M, n) - bracket_rprime_right(L, M, n) + scalar;
}

MinorExpression bracket_sandwich(const MinorSymbol& L, const MinorSymbol& M, int n) {
    if (L.tag != MinorSymbol::Tag::G || M.tag != MinorSymbol::Tag::FInv)
        throw std::invalid_argument("sandwich bracket needs (g, f^-1) tags");
    MinorExpression second;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (!contains(L.rows, u) || !contains(M.cols, u)) continue;
            bool van1 = false, van2 = false;
            int s1 = 1, s2 = 1;
            auto li = sigma_subst(L.rows, u, v, van1, s1);
            auto mt = sigma_subst(M.cols, u, v, van2, s2);
            if (van1 || van2) continue;
            second.add({MinorSymbol(L.tag, li, L.cols), MinorSymbol(M.tag, M.rows, mt)},
                       GaussianRational(s1 * s2));
        }
    }
    MinorExpression scalar = MinorExpression::term(
        {L, M},
        GaussianRational(Rational(setcap(L.cols, M.rows) - setcap(L.rows, M.cols), 2)));
    return bracket_rprime_mid(L, M, n) - second + scalar;
}

MinorExpression simplify_triangular(const MinorExpression& e) {
    MinorExpression out;
    for (const auto& [syms, c] : e.terms()) {
        bool vanish = false;
        for (const auto& s : syms) {
            for (size_t i = 0; i < s.rows.size(); ++i) {
                if (s.tag == MinorSymbol::Tag::G ? s.rows[i] > s.cols[i] : s.rows[i] < s.cols[i])
                    vanish = true;
            }
        }
        if (!vanish) out.add(syms, c);
    }
    return out;
}

std::vector<int> delta_rows(int n, int k, int l) {
    std::vector<int> r;
    for (int i = n - k + 1; i <= n - k + l; ++i) r.push_back(i);
    return r;
}

std::vector<int> delta_cols(int n, int l) {
    std::vector<int> c;
    for (int j = n - l + 1; j <= n; ++j) c.push_back(j);
    return c;
}

Rational coeff_delta_delta(int n, int k, int l, int p, int q) {
    int C = setcap(delta_cols(n, l), delta_cols(n, q));
    int R = setcap(delta_rows(n, k, l), delta_rows(n, p, q));
    return Rational(eps(k - p) * (C - R), 2);
}

Rational coeff_delta_lambda(int n, int k, int l, int p, int q) {
    int A = setcap(delta_cols(n, l), delta_cols(n, q));
    int B = setcap(delta_rows(n, k, l), delta_rows(n, p, q));
    return Rational(A - B, 2);
}

}  // namespace troplie

#pragma once

#include "troplie/rational.hpp"

#include <map>
#include <set>
#include <vector>

namespace troplie {

/// Abstract minor symbol g_{I,J} or (f^-1)_{I,J}; index sets are sorted and
/// duplicate-free with |I| = |J|. The matrix size n lives in the caller.
struct MinorSymbol {
    enum class Tag { G, FInv };
    Tag tag;
    std::vector<int> rows;
    std::vector<int> cols;

    MinorSymbol(Tag t, std::vector<int> r, std::vector<int> c);

    friend bool operator<(const MinorSymbol& a, const MinorSymbol& b) {
        return std::tie(a.tag, a.rows, a.cols) < std::tie(b.tag, b.rows, b.cols);
    }
    friend bool operator==(const MinorSymbol& a, const MinorSymbol& b) {
        return a.tag == b.tag && a.rows == b.rows && a.cols == b.cols;
    }
    std::string str() const;
};

/// Formal combination of products of minor symbols (degree <= 2 in
/// practice). Keys are sorted multisets; zero coefficients are pruned, as
/// are symbols with a repeated index after substitution.
class MinorExpression {
  public:
    MinorExpression() = default;

    static MinorExpression term(std::vector<MinorSymbol> symbols, GaussianRational c);

    void add(std::vector<MinorSymbol> symbols, const GaussianRational& c);

    const std::map<std::vector<MinorSymbol>, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend MinorExpression operator+(const MinorExpression& a, const MinorExpression& b);
    friend MinorExpression operator-(const MinorExpression& a, const MinorExpression& b);
    MinorExpression scaled(const GaussianRational& c) const;
    friend bool operator==(const MinorExpression& a, const MinorExpression& b) {
        return a.terms_ == b.terms_;
    }
    std::string str() const;

  private:
    std::map<std::vector<MinorSymbol>, GaussianRational> terms_;
};

/// Substitutes v for u in the index set. Sets vanishes when v is already
/// present (repeated index). sign is the parity of re-sorting the
/// substituted sequence, i.e. (-1)^{#elements strictly between u and v}.
std::vector<int> sigma_subst(const std::vector<int>& set, int u, int v, bool& vanishes,
                             int& sign);

enum class R0Side { LeftLeft, RightRight, Middle };

/// sum_{u<v} chi_I(u) chi_S(v) L_{sigma_{u,v}(I),J} M_{sigma_{v,u}(S),T}
MinorExpression bracket_rprime_left(const MinorSymbol& L, const MinorSymbol& M, int n);
/// sum_{u<v} chi_J(v) chi_T(u) L_{I,sigma_{v,u}(J)} M_{S,sigma_{u,v}(T)}
MinorExpression bracket_rprime_right(const MinorSymbol& L, const MinorSymbol& M, int n);
/// sum_{u<v} chi_J(v) chi_S(v) L_{I,sigma_{v,u}(J)} M_{sigma_{v,u}(S),T}
MinorExpression bracket_rprime_mid(const MinorSymbol& L, const MinorSymbol& M, int n);
/// scalar 1/2 |I cap S| (LL), 1/2 |J cap T| (RR) or 1/2 |J cap S| (Mid)
/// times the product symbol
MinorExpression bracket_r0(const MinorSymbol& L, const MinorSymbol& M, R0Side side);
/// full [r, .] bracket: rprime_left - rprime_right + 1/2 (|I cap S| - |J cap T|) L M
MinorExpression bracket_commutator(const MinorSymbol& L, const MinorSymbol& M, int n);
/// mixed g/f^-1 bracket of the dual group:
/// rprime_mid - sum chi_I(u) chi_T(u) L_{sigma_{u,v}(I),J} M_{S,sigma_{u,v}(T)}
/// + 1/2 (|J cap S| - |I cap T|) L M
MinorExpression bracket_sandwich(const MinorSymbol& L, const MinorSymbol& M, int n);

/// Drops symbols that vanish on the triangular groups: g_{I,J} with any
/// i_s > j_s positionwise, (f^-1)_{I,J} with any i_s < j_s.
MinorExpression simplify_triangular(const MinorExpression& e);

// Solid-minor index sets: Delta^(k)_l = g_{ {n-k+1..n-k+l}, {n-l+1..n} };
// Lambda^(k)_l = (f^-1)_{ {n-l+1..n}, {n-k+1..n-k+l} }.
std::vector<int> delta_rows(int n, int k, int l);
std::vector<int> delta_cols(int n, int l);

inline int setcap(const std::vector<int>& a, const std::vector<int>& b) {
    int c = 0;
    for (int x : a)
        for (int y : b)
            if (x == y) ++c;
    return c;
}
inline int eps(int d) { return d > 0 ? 1 : d < 0 ? -1 : 0; }

/// 1/2 eps(k-p) (C - R) with C/R the common column/row counts of the two
/// solid minors.
Rational coeff_delta_delta(int n, int k, int l, int p, int q);
/// 1/2 (A - B), A = |J cap S|, B = |I cap T|, for the mixed Delta/Lambda pair.
Rational coeff_delta_lambda(int n, int k, int l, int p, int q);

}  // namespace troplie

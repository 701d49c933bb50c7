#include "troplie/networks.hpp"

#include "troplie/rmatrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace troplie {

void PlanarNetwork::finalize() {
    if (static_cast<int>(sources.size()) != nports || static_cast<int>(sinks.size()) != nports)
        throw std::invalid_argument("network needs n sources and n sinks");
    out.assign(nvertices, {});
    std::vector<int> indeg(nvertices, 0);
    for (size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].from < 0 || edges[e].from >= nvertices || edges[e].to < 0 ||
            edges[e].to >= nvertices)
            throw std::invalid_argument("edge endpoint out of range");
        out[edges[e].from].push_back(static_cast<int>(e));
        ++indeg[edges[e].to];
    }
    // Kahn's check: the network must be acyclic.
    std::vector<int> queue;
    for (int v = 0; v < nvertices; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (int e : out[v])
            if (--indeg[edges[e].to] == 0) queue.push_back(edges[e].to);
    }
    if (seen != nvertices) throw std::invalid_argument("network has a cycle");
}

PlanarNetwork build_gamma_s(int n) {
    if (n < 1) throw std::invalid_argument("build_gamma_s needs n >= 1");
    int nslants = n * (n - 1) / 2;
    int ncols = nslants + 2;  // columns 0..nslants+1 per wire
    PlanarNetwork net;
    net.nports = n;
    net.nvertices = n * ncols;
    auto vid = [&](int wire, int col) { return (wire - 1) * ncols + col; };
    for (int p = 1; p <= nslants; ++p) net.weight_names.push_back("w" + std::to_string(p));
    for (int i = 1; i <= n; ++i) net.weight_names.push_back("d" + std::to_string(i));
    for (int i = 1; i <= n; ++i) {
        net.sources.push_back(vid(i, 0));
        net.sinks.push_back(vid(i, ncols - 1));
        for (int c = 0; c < ncols - 1; ++c)
            net.edges.push_back(
                {vid(i, c), vid(i, c + 1), c == ncols - 2 ? nslants + i - 1 : -1});
    }
    // word position of the j-th slant of type i: the runs have lengths
    // n-1, n-2, ..., 1 and run j contains one slant of each type i <= n-j
    for (int i = 1; i < n; ++i) {
        int offset = 0;
        for (int j = 1; j <= n - i; ++j) {
            int p = offset + i;
            net.edges.push_back({vid(i, p - 1), vid(i + 1, p), p - 1});
            offset += n - j;
        }
    }
    net.finalize();
    return net;
}

std::pair<RegistryPtr, Weighting> symbolic_weighting(const PlanarNetwork& net) {
    auto reg = std::make_shared<VarRegistry>();
    for (const auto& name : net.weight_names) reg->add_real(name);
    RegistryPtr creg = reg;
    Weighting w;
    for (size_t i = 0; i < net.weight_names.size(); ++i)
        w.push_back(LaurentPoly::variable(creg, static_cast<int>(i)));
    return {creg, w};
}

namespace {

LaurentPoly slot_value(const PlanarNetwork& net, const Weighting& w, int slot,
                       const RegistryPtr& reg) {
    if (slot < 0) return LaurentPoly::constant(reg, GaussianRational(1));
    return w.at(slot);
}

RegistryPtr weighting_registry(const Weighting& w) {
    for (const auto& p : w)
        if (p.registry()) return p.registry();
    throw std::invalid_argument("weighting carries no registry");
}

struct SystemEnum {
    const PlanarNetwork& net;
    const std::vector<int>& I;
    const std::vector<int>& J;
    const std::function<void(int, const std::vector<int>&)>& visit;
    std::vector<char> occupied;
    std::vector<char> sink_used;
    std::vector<int> perm;  // source position -> sink position
    std::vector<int> slots;

    void emit() {
        int inversions = 0;
        for (size_t a = 0; a < perm.size(); ++a)
            for (size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) ++inversions;
        visit(inversions % 2 == 0 ? 1 : -1, slots);
    }

    void route(size_t idx) {
        if (idx == I.size()) {
            emit();
            return;
        }
        int s = net.sources.at(I[idx] - 1);
        if (occupied[s]) return;
        occupied[s] = 1;
        extend(idx, s);
        occupied[s] = 0;
    }

    void extend(size_t idx, int v) {
        for (size_t j = 0; j < J.size(); ++j) {
            if (!sink_used[j] && net.sinks.at(J[j] - 1) == v) {
                sink_used[j] = 1;
                perm[idx] = static_cast<int>(j);
                route(idx + 1);
                sink_used[j] = 0;
            }
        }
        for (int e : net.out[v]) {
            int u = net.edges[e].to;
            if (occupied[u]) continue;
            occupied[u] = 1;
            if (net.edges[e].slot >= 0) slots.push_back(net.edges[e].slot);
            extend(idx, u);
            if (net.edges[e].slot >= 0) slots.pop_back();
            occupied[u] = 0;
        }
    }
};

}  // namespace

void for_each_path_system(const PlanarNetwork& net, const std::vector<int>& I,
                          const std::vector<int>& J,
                          const std::function<void(int, const std::vector<int>&)>& visit) {
    if (I.size() != J.size()) throw std::invalid_argument("path system needs |I| = |J|");
    SystemEnum en{net, I, J, visit};
    en.occupied.assign(net.nvertices, 0);
    en.sink_used.assign(J.size(), 0);
    en.perm.assign(I.size(), 0);
    en.route(0);
}

std::vector<std::vector<LaurentPoly>> matrix_from_network(const PlanarNetwork& net,
                                                          const Weighting& w) {
    RegistryPtr reg = weighting_registry(w);
    int n = net.nports;
    std::vector<std::vector<LaurentPoly>> M(n, std::vector<LaurentPoly>(n, LaurentPoly::zero(reg)));
    for (int i = 0; i < n; ++i) {
        // path-sum values from source i, propagated in topological order
        std::vector<LaurentPoly> val(net.nvertices, LaurentPoly::zero(reg));
        val[net.sources[i]] = LaurentPoly::constant(reg, GaussianRational(1));
        std::vector<int> indeg(net.nvertices, 0);
        for (const auto& e : net.edges) ++indeg[e.to];
        std::vector<int> queue;
        for (int v = 0; v < net.nvertices; ++v)
            if (indeg[v] == 0) queue.push_back(v);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int e : net.out[v]) {
                if (!val[v].is_zero())
                    val[net.edges[e].to] =
                        val[net.edges[e].to] + val[v] * slot_value(net, w, net.edges[e].slot, reg);
                if (--indeg[net.edges[e].to] == 0) queue.push_back(net.edges[e].to);
            }
        }
        for (int j = 0; j < n; ++j) M[i][j] = val[net.sinks[j]];
    }
    return M;
}

LaurentPoly minor_lindstrom(const PlanarNetwork& net, const Weighting& w,
                            const std::vector<int>& I, const std::vector<int>& J) {
    RegistryPtr reg = weighting_registry(w);
    LaurentPoly out = LaurentPoly::zero(reg);
    for_each_path_system(net, I, J, [&](int sign, const std::vector<int>& slots) {
        LaurentPoly prod = LaurentPoly::constant(reg, GaussianRational(sign));
        for (int s : slots) prod = prod * w.at(s);
        out = out + prod;
    });
    return out;
}

std::vector<Monomial> solve_weights_from_deltas(int n, const RegistryPtr& reg) {
    PlanarNetwork net = build_gamma_s(n);
    auto [wreg, w] = symbolic_weighting(net);
    int m = n * (n + 1) / 2;
    // exponent matrix of the monomials Delta^(k)_l(w), minors lex in (k, l)
    std::vector<std::vector<Rational>> E;
    std::vector<int> minor_var;
    for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= k; ++l) {
            LaurentPoly d = minor_lindstrom(net, w, delta_rows(n, k, l), delta_cols(n, l));
            if (d.terms().size() != 1 || !(d.terms().begin()->second == GaussianRational(1)))
                throw std::logic_error("solid minor of the staircase network is not monic");
            std::vector<Rational> row;
            for (int e : d.terms().begin()->first.exps) row.push_back(Rational(e));
            E.push_back(std::move(row));
            minor_var.push_back(reg->index_of("D" + std::to_string(k) + "_" + std::to_string(l)));
        }
    }
    // invert E exactly; the inverse must be integral for the weights to be
    // Laurent monomials in the minors
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(2 * m, Rational(0)));
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) A[r][c] = E[r][c];
        A[r][m + r] = 1;
    }
    for (int c = 0; c < m; ++c) {
        int piv = -1;
        for (int r = c; r < m; ++r)
            if (A[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("singular minor-to-weight exponent matrix");
        std::swap(A[c], A[piv]);
        Rational p = A[c][c];
        for (int j = 0; j < 2 * m; ++j) A[c][j] /= p;
        for (int r = 0; r < m; ++r) {
            if (r == c || A[r][c] == 0) continue;
            Rational f = A[r][c];
            for (int j = 0; j < 2 * m; ++j) A[r][j] -= f * A[c][j];
        }
    }
    std::vector<Monomial> solved(m, Monomial(reg->size()));
    for (int e = 0; e < m; ++e) {
        for (int mm = 0; mm < m; ++mm) {
            // log w = E^{-1} log Delta, so row e of the inverse carries the
            // Delta exponents of weight e
            Rational x = A[e][m + mm];
            if (denominator(x) != 1)
                throw std::logic_error("weight is not a Laurent monomial in the minors");
            solved[e].exps[minor_var[mm]] += numerator(x).convert_to<int>();
        }
    }
    return solved;
}

LaurentPoly minor_in_deltas(int n, const std::vector<int>& I, const std::vector<int>& J,
                            const RegistryPtr& reg) {
    static std::map<std::pair<int, const VarRegistry*>, std::vector<Monomial>> cache;
    auto key = std::make_pair(n, reg.get());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, solve_weights_from_deltas(n, reg)).first;
    PlanarNetwork net = build_gamma_s(n);
    Weighting w;
    for (const auto& mono : it->second)
        w.push_back(LaurentPoly::monomial(reg, mono, GaussianRational(1)));
    return minor_lindstrom(net, w, I, J);
}

}  // namespace troplie

#pragma once

#include "troplie/laurent.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace troplie {

/// Layered planar DAG between a source line and a sink line; sources and
/// sinks are numbered 1..n top-to-bottom. Edges reference weight slots;
/// slot -1 means unit weight.
struct PlanarNetwork {
    struct Edge {
        int from = 0;
        int to = 0;
        int slot = -1;
    };

    int nports = 0;
    int nvertices = 0;
    std::vector<Edge> edges;
    std::vector<int> sources, sinks;  // vertex ids
    std::vector<std::string> weight_names;
    std::vector<std::vector<int>> out;  // vertex -> outgoing edge indices

    /// Builds the adjacency lists and checks port counts and acyclicity.
    void finalize();
};

/// Staircase network on n wires: slanted edges in the word
/// s_1..s_{n-1} | s_1..s_{n-2} | ... | s_1, one weight w_p per slanted edge
/// (by word position) and one weight d_i on the rightmost horizontal segment
/// of each wire. Total n(n+1)/2 weight slots.
PlanarNetwork build_gamma_s(int n);

/// One value per weight slot.
using Weighting = std::vector<LaurentPoly>;

/// Fresh all-real registry with one generator per weight slot, plus the
/// matching weighting of single variables.
std::pair<RegistryPtr, Weighting> symbolic_weighting(const PlanarNetwork& net);

/// M_{ij} = sum over paths source i -> sink j of the edge-weight product.
std::vector<std::vector<LaurentPoly>> matrix_from_network(const PlanarNetwork& net,
                                                          const Weighting& w);

/// Enumerates all vertex-disjoint path systems from sources I to sinks J
/// (1-based port numbers); visit receives the connecting permutation's sign
/// and the weight slots used (unit edges omitted).
void for_each_path_system(const PlanarNetwork& net, const std::vector<int>& I,
                          const std::vector<int>& J,
                          const std::function<void(int, const std::vector<int>&)>& visit);

/// Lindstrom sum over vertex-disjoint path systems; equals the I x J minor
/// of matrix_from_network.
LaurentPoly minor_lindstrom(const PlanarNetwork& net, const Weighting& w,
                            const std::vector<int>& I, const std::vector<int>& J);

/// Expresses each weight slot of the staircase network as a Laurent monomial
/// in the solid minors, by exact inversion of the (unimodular) exponent
/// matrix of the monomials Delta^(k)_l(w). reg must contain generators named
/// "D{k}_{l}" for 1 <= l <= k <= n; exponent vectors are sized for reg.
std::vector<Monomial> solve_weights_from_deltas(int n, const RegistryPtr& reg);

/// Minor g_{I,J} of the generic upper-triangular matrix parametrized by the
/// staircase network, as a Laurent polynomial in the solid minors "D{k}_{l}"
/// of reg. Below-diagonal minors come out as 0.
LaurentPoly minor_in_deltas(int n, const std::vector<int>& I, const std::vector<int>& J,
                            const RegistryPtr& reg);

}  // namespace troplie

#pragma once

#include "troplie/rational.hpp"

#include <set>
#include <string>
#include <vector>

namespace troplie {

using IntVec = std::vector<Integer>;

/// Divides by the gcd of the entries, keeping the sign. Zero vectors are
/// rejected by callers that care.
IntVec primitivize(IntVec v);

/// Open homogeneous cone { eta : <n, eta> > 0 for every stored normal }.
/// Normals are primitive, nonzero and deduplicated. Optional coordinate
/// names ride along for serialization.
struct StrictCone {
    int dim = 0;
    std::set<IntVec> normals;
    std::vector<std::string> coords;

    explicit StrictCone(int d) : dim(d) {}
    StrictCone(int d, std::vector<std::string> names) : dim(d), coords(std::move(names)) {}

    /// Inserts after primitivization; ignores exact duplicates, rejects zero.
    void add_normal(IntVec n);
};

StrictCone cone_intersect(const StrictCone& a, const StrictCone& b);
bool cone_is_empty(const StrictCone& c);
/// True iff <m, eta> > 0 holds on all of c. m must be nonzero.
bool cone_implies(const StrictCone& c, const IntVec& m);
/// Mutual implication of all normals; both cones must be nonempty.
bool cone_equal(const StrictCone& a, const StrictCone& b);
/// Minimal subset of normals with the same cone; input must be nonempty.
StrictCone cone_remove_redundant(const StrictCone& c);
/// Rational point with slack >= 1 against every normal, chosen by maximizing
/// the minimum slack inside a box that doubles until feasible.
std::vector<Rational> cone_interior_sample(const StrictCone& c);

}  // namespace troplie

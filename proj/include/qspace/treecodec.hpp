#pragma once

#include "qspace/space.hpp"
#include "qspace/tree.hpp"

namespace qspace {

/// The natural tree of X over finite S (|S| = h): leaves at depth h are the
/// points of X, two leaves meet at height k exactly when their distance is
/// s_k, and singleton clusters are padded with unary chains so every leaf
/// reaches depth h. Children are left in cluster-discovery order; compare
/// trees through canonical encodings.
RootedTree tree_of_space(const FiniteSpace& X, DistanceSet& S);

/// Same, also reporting which point each leaf carries: leaf_points[i] is the
/// point index of the i-th leaf in node-index order.
RootedTree tree_of_space(const FiniteSpace& X, DistanceSet& S, std::vector<std::size_t>& leaf_points);

/// Inverse direction: points are the leaves of T (which must all sit at depth
/// |S|), and d(x,y) = s_k where k is the depth of the meet.
FiniteSpace space_of_leaves(const RootedTree& T, DistanceSet& S);

/// Both degree candidates for X: |e(T_X)| and |e(T_X)| / |Aut(T_X)|. The
/// division is always exact (automorphisms act freely on linear extensions);
/// the two counts disagree exactly when T_X has symmetry, and both are
/// reported everywhere rather than silently choosing one.
struct RamseyDegree {
    BigNat extension_count;
    BigNat orbit_count;
    BigNat automorphism_count;
};

RamseyDegree big_ramsey_degree(const FiniteSpace& X, DistanceSet& S);

/// Extension counts of the same X over nested finite sets S and S_prime;
/// requires S a proper subset of S_prime, X valid over S, |X| >= 2. The
/// strict flag records extension_in_super > extension_in_sub.
struct MonotonicityReport {
    BigNat extension_in_sub;
    BigNat extension_in_super;
    bool strict_increase;
};

MonotonicityReport degree_monotonicity_report(const FiniteSpace& X, DistanceSet& S, DistanceSet& S_prime);

} // namespace qspace

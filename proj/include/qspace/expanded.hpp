#pragma once

#include "qspace/qpoint.hpp"
#include "qspace/tree.hpp"

#include <vector>

namespace qspace {

/// A node of omega^{<=h}: a finite integer sequence. The empty sequence is
/// the root.
using Seq = std::vector<Nat>;

/// A set of sequences treated as a subtree under prefix order. Canonical
/// storage is sorted.
using NodeSet = std::vector<Seq>;

NodeSet sorted_nodeset(NodeSet nodes);

/// Longest common prefix.
Seq meet(const Seq& a, const Seq& b);

bool is_strictly_increasing(const Seq& s);

/// Requires the set to contain the empty sequence and be closed under meets
/// (throws otherwise). Returns true when the set is expanded: every node is a
/// strictly increasing sequence, and whenever two nodes differ at position k
/// they differ at every later position where both are defined.
bool is_expanded(const NodeSet& nodes);

/// The prefix-order tree of a meet-closed node set containing the root;
/// node_of[i] gives the sequence at tree node i.
RootedTree tree_of_nodeset(const NodeSet& nodes, std::vector<Seq>& node_of);

/// A linear extension of a pattern tree, as the node sequence in increasing
/// order (root first).
using TypeLabel = std::vector<int>;

/// The types realized by an expanded copy of T: order the copy by last
/// entries (root first) and pull that order back along every tree
/// isomorphism onto T. Several types appear exactly when Aut(T) is
/// nontrivial; a copy whose nonempty nodes repeat a last entry carries no
/// linear order and realizes no type. Throws when the copy is not isomorphic
/// to T.
std::vector<TypeLabel> type_of(const NodeSet& copy, const RootedTree& T);

/// Last entries of the nonempty nodes, sorted increasing.
std::vector<Nat> psi(const NodeSet& copy);

/// The unique expanded copy with type `order` whose last-entry set is M:
/// walk T in `order`, give the root the empty sequence, and append the next
/// element of M (in increasing order) to the parent's sequence. |M| must be
/// |T| - 1.
NodeSet phi(const TypeLabel& order, const std::vector<Nat>& M, const RootedTree& T);

/// An expanded subtree of N^{<=h}, `width`-branching at every non-leaf node,
/// consuming the (sorted) label pool N in increasing order along a DFS. N
/// must hold at least width + width^2 + ... + width^h labels.
NodeSet expanded_universal(const std::vector<Nat>& N, std::size_t h, Nat width);

/// Every expanded copy of T (containing the root, meet-closed) whose nodes
/// are strictly increasing sequences over {0..value_bound-1} of length at
/// most height_bound. Exhaustive; meant for small windows.
std::vector<NodeSet> enumerate_expanded_copies(const RootedTree& T, Nat value_bound, std::size_t height_bound);

} // namespace qspace

#pragma once

#include "qspace/qpoint.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qspace {

using BigNat = mpz_class;

/// Finite rooted tree stored as an index arena; node 0 is the root. Identity
/// under isomorphism is decided through the canonical encoding, so child
/// storage order is free until canonicalized() is called.
class RootedTree {
public:
    RootedTree();

    /// parents[0] must be -1 (root); parents[v] < v for v > 0.
    static RootedTree from_parents(const std::vector<int>& parents);

    std::size_t size() const { return parent_.size(); }
    int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& children(int v) const { return children_[static_cast<std::size_t>(v)]; }
    bool is_leaf(int v) const { return children(v).empty(); }

    /// Appends a new child of `parent` and returns its index.
    int add_child(int parent);

    int depth(int v) const;
    std::vector<int> leaves() const;
    /// True when every leaf has the same depth, returned through `depth_out`.
    bool uniform_leaf_depth(std::size_t& depth_out) const;

    /// subtree_sizes()[v] = number of nodes in the subtree rooted at v.
    std::vector<std::size_t> subtree_sizes() const;

    /// Copy with children recursively sorted by canonical encoding.
    RootedTree canonicalized() const;

private:
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
};

/// Bottom-up sorted-subtree serialization; equal iff the trees are
/// isomorphic.
std::string canonical_encoding(const RootedTree& t);

bool is_isomorphic(const RootedTree& a, const RootedTree& b);

/// |e(T)|: the number of linear orders on the nodes extending the tree order,
/// computed by the hook-length product |T|! / prod_v |subtree(v)|.
BigNat count_linear_extensions(const RootedTree& t);

/// Independent oracle for count_linear_extensions: explicit enumeration of
/// all topological orderings. Feasible to ten-or-so nodes.
BigNat brute_force_extensions(const RootedTree& t, std::size_t node_bound = 12);

/// Every linear extension as a node sequence (root first). Guarded by a cap
/// on the number of produced orders.
std::vector<std::vector<int>> enumerate_linear_extensions(const RootedTree& t, std::size_t max_orders = 200000);

/// |Aut(T)| = product over nodes of (multiplicity!) across isomorphism
/// classes of children.
BigNat count_automorphisms(const RootedTree& t);

/// All isomorphisms a -> b as node index maps (empty when not isomorphic).
std::vector<std::vector<int>> enumerate_tree_isomorphisms(const RootedTree& a, const RootedTree& b);

/// Parses the nested-array tree format, e.g. "[[],[]]" is a root with two
/// leaves. Whitespace tolerant.
RootedTree parse_tree(const std::string& text);
std::string format_tree(const RootedTree& t);

} // namespace qspace

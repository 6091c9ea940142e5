#include "qspace/treecodec.hpp"

#include "qspace/error.hpp"

#include <algorithm>
#include <functional>

namespace qspace {

namespace {

// Splits cluster points (indices into X) into the equivalence classes of
// d < s_level; within a cluster at height `level` all distances are <= s_level.
std::vector<std::vector<std::size_t>> split_cluster(const FiniteSpace& X, const std::vector<std::size_t>& cluster,
                                                    const Rational& s_level) {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t p : cluster) {
        bool placed = false;
        for (auto& cls : classes) {
            if (X.dist(cls.front(), p) < s_level) {
                cls.push_back(p);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({p});
    }
    return classes;
}

} // namespace

RootedTree tree_of_space(const FiniteSpace& X, DistanceSet& S, std::vector<std::size_t>& leaf_points) {
    require_valid_space(X, S, "tree_of_space");
    if (!S.is_finite()) throw Error("tree_of_space: S must be finite");
    const std::size_t h = S.materialized_count();
    if (X.size() == 0) throw Error("tree_of_space: empty space");

    RootedTree t;
    leaf_points.clear();
    std::function<void(int, std::size_t, const std::vector<std::size_t>&)> build =
        [&](int node, std::size_t level, const std::vector<std::size_t>& cluster) {
            if (level == h) {
                if (cluster.size() != 1) throw Error("tree_of_space: distinct points at distance 0");
                leaf_points.push_back(cluster.front());
                return;
            }
            for (const auto& cls : split_cluster(X, cluster, S.value(level)))
                build(t.add_child(node), level + 1, cls);
        };

    std::vector<std::size_t> all(X.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    build(0, 0, all);
    return t;
}

RootedTree tree_of_space(const FiniteSpace& X, DistanceSet& S) {
    std::vector<std::size_t> leaf_points;
    return tree_of_space(X, S, leaf_points);
}

FiniteSpace space_of_leaves(const RootedTree& T, DistanceSet& S) {
    if (!S.is_finite()) throw Error("space_of_leaves: S must be finite");
    const std::size_t h = S.materialized_count();
    std::size_t leaf_depth = 0;
    if (!T.uniform_leaf_depth(leaf_depth)) throw Error("space_of_leaves: leaves are not at uniform depth");
    if (leaf_depth != h)
        throw Error("space_of_leaves: leaf depth " + std::to_string(leaf_depth) + " does not match |S| = " +
                    std::to_string(h));

    auto ls = T.leaves();
    const std::size_t n = ls.size();
    // depth of the meet of two leaves
    auto meet_depth = [&](int a, int b) {
        while (a != b) {
            if (T.depth(a) >= T.depth(b))
                a = T.parent(a);
            else
                b = T.parent(b);
        }
        return static_cast<std::size_t>(T.depth(a));
    };
    std::vector<std::string> labels;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("p" + std::to_string(i));
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t k = meet_depth(ls[i], ls[j]);
            if (k >= h) throw Error("space_of_leaves: two leaves share a full-depth meet");
            m[i][j] = m[j][i] = S.value(k);
        }
    }
    return FiniteSpace(std::move(labels), std::move(m));
}

RamseyDegree big_ramsey_degree(const FiniteSpace& X, DistanceSet& S) {
    RootedTree t = tree_of_space(X, S);
    RamseyDegree d;
    d.extension_count = count_linear_extensions(t);
    d.automorphism_count = count_automorphisms(t);
    BigNat q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), d.extension_count.get_mpz_t(), d.automorphism_count.get_mpz_t());
    if (r != 0) throw Error("big_ramsey_degree: automorphism count does not divide extension count");
    d.orbit_count = q;
    return d;
}

MonotonicityReport degree_monotonicity_report(const FiniteSpace& X, DistanceSet& S, DistanceSet& S_prime) {
    if (!S.is_finite() || !S_prime.is_finite())
        throw Error("degree_monotonicity_report: both distance sets must be finite");
    if (X.size() < 2) throw Error("degree_monotonicity_report: |X| >= 2 required");
    if (S.materialized_count() >= S_prime.materialized_count())
        throw Error("degree_monotonicity_report: S must be a proper subset of S'");
    for (const Rational& s : S.materialized())
        if (!S_prime.contains(s)) throw Error("degree_monotonicity_report: " + s.str() + " is not in S'");
    require_valid_space(X, S, "degree_monotonicity_report");

    MonotonicityReport rep;
    rep.extension_in_sub = count_linear_extensions(tree_of_space(X, S));
    rep.extension_in_super = count_linear_extensions(tree_of_space(X, S_prime));
    rep.strict_increase = rep.extension_in_super > rep.extension_in_sub;
    return rep;
}

} // namespace qspace

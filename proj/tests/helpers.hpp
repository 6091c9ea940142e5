#pragma once

#include "qspace/space.hpp"
#include "qspace/tree.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <vector>

namespace qspace::testing {

/// Grafts `sub`'s subtree rooted at sub_node under t's node `at`.
inline void graft(RootedTree& t, int at, const RootedTree& sub, int sub_node) {
    int nv = t.add_child(at);
    for (int c : sub.children(sub_node)) graft(t, nv, sub, c);
}

/// All rooted trees with exactly n nodes, one per isomorphism class.
/// (Counts follow 1, 1, 2, 4, 9, 20, 48, ... which the tests assert.)
inline const std::vector<RootedTree>& all_rooted_trees(std::size_t n) {
    static std::deque<std::vector<RootedTree>> cache; // cache[k] = trees with k+1 nodes; deque keeps references stable
    while (cache.size() < n) {
        std::size_t target = cache.size() + 1;
        std::vector<RootedTree> result;
        if (target == 1) {
            result.emplace_back();
        } else {
            // Root plus a multiset of subtrees with sizes summing to target-1,
            // enumerated once each: children are chosen with non-increasing
            // (size, index) keys.
            std::vector<std::pair<std::size_t, std::size_t>> chosen;
            std::function<void(std::size_t, std::size_t, std::size_t)> pick =
                [&](std::size_t remaining, std::size_t max_size, std::size_t max_index) {
                    if (remaining == 0) {
                        RootedTree t;
                        for (const auto& [size, index] : chosen) graft(t, 0, cache[size - 1][index], 0);
                        result.push_back(std::move(t));
                        return;
                    }
                    for (std::size_t size = std::min(remaining, max_size); size >= 1; --size) {
                        const auto& pool = cache[size - 1];
                        std::size_t start = (size == max_size) ? std::min(max_index, pool.size() - 1)
                                                               : pool.size() - 1;
                        for (std::size_t index = start + 1; index-- > 0;) {
                            chosen.emplace_back(size, index);
                            pick(remaining - size, size, index);
                            chosen.pop_back();
                        }
                    }
                };
            pick(target - 1, target - 1, std::size_t(-1));
        }
        cache.push_back(std::move(result));
    }
    return cache[n - 1];
}

/// Exhaustive isomorphism test, independent of canonical encodings.
inline bool brute_force_isomorphic(const RootedTree& a, int va, const RootedTree& b, int vb) {
    const auto& ca = a.children(va);
    const auto& cb = b.children(vb);
    if (ca.size() != cb.size()) return false;
    std::vector<int> perm(cb.begin(), cb.end());
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i < ca.size() && ok; ++i)
            ok = brute_force_isomorphic(a, ca[i], b, perm[i]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool brute_force_isomorphic(const RootedTree& a, const RootedTree& b) {
    if (a.size() != b.size()) return false;
    return brute_force_isomorphic(a, 0, b, 0);
}

/// Number of isomorphisms subtree(va) -> subtree(vb), by exhaustive matching.
inline long long brute_force_iso_count(const RootedTree& a, int va, const RootedTree& b, int vb) {
    const auto& ca = a.children(va);
    const auto& cb = b.children(vb);
    if (ca.size() != cb.size()) return 0;
    if (ca.empty()) return 1;
    long long total = 0;
    std::vector<int> perm(cb.begin(), cb.end());
    std::sort(perm.begin(), perm.end());
    do {
        long long ways = 1;
        for (std::size_t i = 0; i < ca.size() && ways > 0; ++i)
            ways *= brute_force_iso_count(a, ca[i], b, perm[i]);
        total += ways;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline long long brute_force_automorphism_count(const RootedTree& t) {
    return brute_force_iso_count(t, 0, t, 0);
}

/// Random tree with all leaves at depth `h` and 1..max_branch children per
/// internal node.
inline RootedTree random_uniform_tree(std::mt19937& rng, std::size_t h, int max_branch) {
    RootedTree t;
    std::function<void(int, std::size_t)> grow = [&](int node, std::size_t depth) {
        if (depth == h) return;
        int k = std::uniform_int_distribution<int>(1, max_branch)(rng);
        for (int i = 0; i < k; ++i) grow(t.add_child(node), depth + 1);
    };
    grow(0, 0);
    return t;
}

/// Random ultrametric space over the finite set S: a random nested partition
/// assigns d(x,y) = s_level at the level where x and y separate. Built
/// directly from the metric definition, independent of the tree codec.
inline FiniteSpace random_ultrametric_space(std::mt19937& rng, std::size_t n, DistanceSet& S) {
    const std::size_t h = S.materialized_count();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    std::function<void(std::vector<std::size_t>, std::size_t)> split =
        [&](std::vector<std::size_t> points, std::size_t level) {
            if (points.size() <= 1) return;
            if (level + 1 == h) {
                for (std::size_t i = 0; i < points.size(); ++i)
                    for (std::size_t j = i + 1; j < points.size(); ++j)
                        m[points[i]][points[j]] = m[points[j]][points[i]] = S.value(level);
                return;
            }
            std::size_t groups = std::uniform_int_distribution<std::size_t>(1, points.size())(rng);
            std::vector<std::vector<std::size_t>> parts(groups);
            for (std::size_t p : points)
                parts[std::uniform_int_distribution<std::size_t>(0, groups - 1)(rng)].push_back(p);
            for (std::size_t a = 0; a < groups; ++a)
                for (std::size_t b = a + 1; b < groups; ++b)
                    for (std::size_t x : parts[a])
                        for (std::size_t y : parts[b]) m[x][y] = m[y][x] = S.value(level);
            for (auto& part : parts) split(std::move(part), level + 1);
        };
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    split(std::move(all), 0);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return FiniteSpace(std::move(labels), std::move(m));
}

} // namespace qspace::testing

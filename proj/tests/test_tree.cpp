#include "qspace/error.hpp"
#include "qspace/tree.hpp"
#include "qspace/treecodec.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace qspace;
using namespace qspace::testing;

namespace {

Rational rat(const char* s) {
    return Rational::parse(s);
}

RootedTree chain(std::size_t length) {
    RootedTree t;
    int at = 0;
    for (std::size_t i = 1; i < length; ++i) at = t.add_child(at);
    return t;
}

RootedTree star(std::size_t leaves) {
    RootedTree t;
    for (std::size_t i = 0; i < leaves; ++i) t.add_child(0);
    return t;
}

RootedTree complete_binary(std::size_t depth) {
    RootedTree t;
    std::function<void(int, std::size_t)> grow = [&](int v, std::size_t d) {
        if (d == depth) return;
        grow(t.add_child(v), d + 1);
        grow(t.add_child(v), d + 1);
    };
    grow(0, 0);
    return t;
}

} // namespace

TEST_CASE("nested-array parsing round trips") {
    auto t = parse_tree("[[],[]]");
    CHECK(t.size() == 3);
    CHECK(t.children(0).size() == 2);
    CHECK(format_tree(t) == "[[],[]]");

    auto u = parse_tree(" [ [ [] , [] ] ] ");
    CHECK(u.size() == 4);
    CHECK(u.children(0).size() == 1);

    CHECK_THROWS_AS(parse_tree("[[]"), Error);
    CHECK_THROWS_AS(parse_tree("[]]"), Error);
}

TEST_CASE("canonical encoding decides isomorphism") {
    auto t = parse_tree("[[[],[]],[]]");
    auto u = parse_tree("[[],[[],[]]]"); // child-permuted copy
    CHECK(is_isomorphic(t, u));
    CHECK(canonical_encoding(t) == canonical_encoding(u));
    CHECK(canonical_encoding(t.canonicalized()) == canonical_encoding(t));

    CHECK_FALSE(is_isomorphic(chain(2), star(2)));

    // random cross-check against the exhaustive matcher
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t na = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        std::size_t nb = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        const auto& pool_a = all_rooted_trees(na);
        const auto& pool_b = all_rooted_trees(nb);
        const RootedTree& a = pool_a[std::uniform_int_distribution<std::size_t>(0, pool_a.size() - 1)(rng)];
        const RootedTree& b = pool_b[std::uniform_int_distribution<std::size_t>(0, pool_b.size() - 1)(rng)];
        CHECK(is_isomorphic(a, b) == brute_force_isomorphic(a, b));
    }
}

TEST_CASE("exhaustive tree generation hits the known class counts") {
    const std::size_t expected[] = {1, 1, 2, 4, 9, 20, 48};
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto& trees = all_rooted_trees(n);
        CHECK(trees.size() == expected[n - 1]);
        // all distinct
        std::set<std::string> encs;
        for (const auto& t : trees) {
            CHECK(t.size() == n);
            encs.insert(canonical_encoding(t));
        }
        CHECK(encs.size() == trees.size());
    }
}

TEST_CASE("extension counts: closed form against enumeration") {
    CHECK(count_linear_extensions(chain(3)) == 1);
    CHECK(count_linear_extensions(star(3)) == 6);
    CHECK(brute_force_extensions(star(3)) == 6);
    CHECK(count_linear_extensions(complete_binary(2)) == 80); // 7!/(7*3*3)
    CHECK(brute_force_extensions(complete_binary(2)) == 80);

    CHECK(brute_force_extensions(chain(5)) == 1);
    CHECK(brute_force_extensions(star(2)) == 2);
    CHECK_THROWS_AS(brute_force_extensions(star(13), 12), Error);

    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& t : all_rooted_trees(n)) CHECK(count_linear_extensions(t) == brute_force_extensions(t));

    // chains have one extension; stars have n!
    CHECK(count_linear_extensions(chain(9)) == 1);
    CHECK(count_linear_extensions(star(5)) == 120);
}

TEST_CASE("enumerated extensions agree with the count and extend the order") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& t : all_rooted_trees(n)) {
            auto orders = enumerate_linear_extensions(t);
            CHECK(BigNat(static_cast<unsigned long>(orders.size())) == count_linear_extensions(t));
            for (const auto& order : orders) {
                std::vector<std::size_t> pos(t.size());
                for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = i;
                for (std::size_t v = 1; v < t.size(); ++v)
                    CHECK(pos[static_cast<std::size_t>(t.parent(static_cast<int>(v)))] < pos[v]);
            }
        }
}

TEST_CASE("automorphism counts") {
    CHECK(count_automorphisms(chain(4)) == 1);
    CHECK(count_automorphisms(star(3)) == 6);
    CHECK(count_automorphisms(complete_binary(2)) == 8);
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& t : all_rooted_trees(n)) {
            CHECK(count_automorphisms(t) == BigNat(static_cast<long>(brute_force_automorphism_count(t))));
            // the automorphism action on extensions is free
            BigNat q, r;
            BigNat e = count_linear_extensions(t);
            BigNat a = count_automorphisms(t);
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), a.get_mpz_t());
            CHECK(r == 0);
        }
}

TEST_CASE("isomorphism enumeration") {
    auto t = star(2);
    CHECK(enumerate_tree_isomorphisms(t, t).size() == 2);
    auto c = chain(3);
    CHECK(enumerate_tree_isomorphisms(c, c).size() == 1);
    CHECK(enumerate_tree_isomorphisms(c, t).empty());
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& tr : all_rooted_trees(n)) {
            auto isos = enumerate_tree_isomorphisms(tr, tr);
            CHECK(BigNat(static_cast<unsigned long>(isos.size())) == count_automorphisms(tr));
        }
}

TEST_CASE("tree_of_space shapes") {
    auto S1 = DistanceSet::finite({rat("1")});
    auto pair = equilateral_space(2, rat("1"));
    auto t = tree_of_space(pair, S1);
    CHECK(canonical_encoding(t) == canonical_encoding(star(2)));

    auto S2 = DistanceSet::finite({rat("1"), rat("1/2")});
    auto singleton = equilateral_space(1, rat("1"));
    auto u = tree_of_space(singleton, S2);
    CHECK(canonical_encoding(u) == canonical_encoding(chain(3)));

    // two close points and one far: root with children {a,b} and the chain over c
    std::vector<std::vector<Rational>> m{
        {rat("0"), rat("1/2"), rat("1")},
        {rat("1/2"), rat("0"), rat("1")},
        {rat("1"), rat("1"), rat("0")},
    };
    FiniteSpace triple({"a", "b", "c"}, m);
    auto tr = tree_of_space(triple, S2);
    CHECK(tr.size() == 6);
    CHECK(canonical_encoding(tr) == canonical_encoding(parse_tree("[[[],[]],[[]]]")));
    // round trip reproduces the matrix up to relabeling
    auto back = space_of_leaves(tr, S2);
    CHECK(is_isomorphic(tree_of_space(back, S2), tr));

    auto S_bad = DistanceSet::finite({rat("1")});
    CHECK_THROWS_AS(tree_of_space(triple, S_bad), Error);
}

TEST_CASE("space_of_leaves") {
    auto S1 = DistanceSet::finite({rat("1")});
    auto sp = space_of_leaves(star(3), S1);
    CHECK(sp.size() == 3);
    CHECK(sp.dist(0, 1) == rat("1"));
    CHECK(validate_space(sp, S1).empty());

    auto S2 = DistanceSet::finite({rat("1"), rat("1/2")});
    auto single = space_of_leaves(chain(3), S2);
    CHECK(single.size() == 1);

    CHECK_THROWS_AS(space_of_leaves(star(3), S2), Error); // depth mismatch
}

TEST_CASE("duality round trips on random instances") {
    std::mt19937 rng(23);
    auto S = DistanceSet::finite({rat("1"), rat("1/2"), rat("1/4")});
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
        FiniteSpace X = random_ultrametric_space(rng, n, S);
        REQUIRE(validate_space(X, S).empty());
        auto t = tree_of_space(X, S);
        auto back = space_of_leaves(t, S);
        CHECK(is_isomorphic(tree_of_space(back, S), t));

        RootedTree u = random_uniform_tree(rng, 3, 3);
        auto sp = space_of_leaves(u, S);
        CHECK(is_isomorphic(tree_of_space(sp, S), u));
    }
}

TEST_CASE("big ramsey degree candidates") {
    auto S1 = DistanceSet::finite({rat("1")});
    auto d_single = big_ramsey_degree(equilateral_space(1, rat("1")), S1);
    CHECK(d_single.extension_count == 1);
    CHECK(d_single.orbit_count == 1);

    auto d_pair = big_ramsey_degree(equilateral_space(2, rat("1")), S1);
    CHECK(d_pair.extension_count == 2);
    CHECK(d_pair.orbit_count == 1);
    CHECK(d_pair.automorphism_count == 2);

    auto S2 = DistanceSet::finite({rat("1"), rat("1/2")});
    std::vector<std::vector<Rational>> m{
        {rat("0"), rat("1/2"), rat("1")},
        {rat("1/2"), rat("0"), rat("1")},
        {rat("1"), rat("1"), rat("0")},
    };
    FiniteSpace triple({"a", "b", "c"}, m);
    auto d_triple = big_ramsey_degree(triple, S2);
    CHECK(d_triple.extension_count == 20);
    CHECK(d_triple.extension_count == brute_force_extensions(tree_of_space(triple, S2)));
}

TEST_CASE("degree monotonicity under distance-set growth") {
    auto pair = equilateral_space(2, rat("1"));
    auto S = DistanceSet::finite({rat("1")});
    auto S2 = DistanceSet::finite({rat("1"), rat("1/2")});
    auto S3 = DistanceSet::finite({rat("1"), rat("1/2"), rat("1/4")});

    auto r12 = degree_monotonicity_report(pair, S, S2);
    CHECK(r12.extension_in_sub == 2);
    CHECK(r12.strict_increase);
    CHECK(r12.extension_in_super == brute_force_extensions(tree_of_space(pair, S2)));

    auto r23 = degree_monotonicity_report(pair, S2, S3);
    CHECK(r23.extension_in_sub == r12.extension_in_super);
    CHECK(r23.strict_increase);

    auto singleton = equilateral_space(1, rat("1"));
    CHECK_THROWS_AS(degree_monotonicity_report(singleton, S, S2), Error);
    // S not a subset
    auto S_other = DistanceSet::finite({rat("2")});
    CHECK_THROWS_AS(degree_monotonicity_report(pair, S_other, S2), Error);
}

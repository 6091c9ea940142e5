#include "qspace/cover.hpp"
#include "qspace/embed.hpp"
#include "qspace/enumerate.hpp"
#include "qspace/error.hpp"
#include "qspace/smallness.hpp"
#include "qspace/sphere.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace qspace;

namespace {

Rational rat(const char* s) {
    return Rational::parse(s);
}

QPoint pt(std::vector<std::pair<const char*, Nat>> entries) {
    std::vector<QPoint::Entry> es;
    for (auto& [s, v] : entries) es.emplace_back(Rational::parse(s), v);
    return QPoint::from_pairs(std::move(es));
}

} // namespace

TEST_CASE("ladders") {
    auto l = Ladder::approach_one();
    CHECK(l.value(0) == Rational(0));
    CHECK(l.value(1) == rat("1/2"));
    CHECK(l.value(3) == rat("7/8"));
    CHECK(*l.sup() == Rational(1));

    CHECK(l.interval_index(Rational(0)) == 0);
    CHECK(l.interval_index(rat("1/3")) == 0);
    CHECK(l.interval_index(rat("1/2")) == 1);  // half-open interval
    CHECK(l.interval_index(rat("3/4")) == 2);
    CHECK(l.interval_index(rat("5/6")) == 2);
    CHECK_THROWS_AS(l.interval_index(Rational(1)), Error);

    auto fin = Ladder::from_values({Rational(0), rat("1/2"), rat("3/4")});
    CHECK(fin.interval_index(rat("1/2")) == 1);
    CHECK_THROWS_AS(fin.interval_index(rat("3/4")), Error); // beyond the materialized prefix
    CHECK_THROWS_AS(Ladder::from_values({rat("1/2")}), Error); // must start at 0
}

TEST_CASE("index partitions") {
    auto mod3 = IndexPartition::mod(3);
    CHECK(mod3.class_of(0) == 0);
    CHECK(mod3.class_of(5) == 2);
    CHECK(mod3.least_in_class_above(1, 4) == 7);

    auto pairing = IndexPartition::pairing();
    // classes partition: each index has exactly one class; classes recur
    std::map<Nat, int> counts;
    for (std::size_t i = 0; i < 300; ++i) counts[pairing.class_of(i)]++;
    CHECK(counts[0] >= 10); // class 0 keeps appearing
    CHECK(counts[1] >= 10);
    std::size_t i7 = pairing.least_in_class_above(7, 0);
    CHECK(pairing.class_of(i7) == 7);
}

TEST_CASE("separated nets") {
    // unbounded ladder: any singleton works
    auto unbounded = Ladder::generated([](std::size_t i) { return Rational(static_cast<long>(i)); },
                                       std::nullopt);
    auto S = DistanceSet::finite({rat("1"), rat("1/2")});
    auto region = enumerate_qpoints(S, 2, 3);
    auto net0 = build_separated_net(unbounded, region);
    CHECK(net0 == std::vector<QPoint>{QPoint()});

    // rho = 1 with 1 in S: points differing at coordinate 1 stay
    auto ladder = Ladder::from_values({Rational(0), rat("1/2"), rat("3/4")});
    // sup is 3/4 here; use a rho = 1 ladder via generated with sup 1
    auto l1 = Ladder::approach_one();
    auto net = build_separated_net(l1, region);
    CHECK(net.size() == 3); // one per coordinate-1 value
    for (std::size_t i = 0; i < net.size(); ++i)
        for (std::size_t j = i + 1; j < net.size(); ++j) CHECK(q_distance(net[i], net[j]) >= Rational(1));
    // maximality within the region: everything is near some net point
    for (const QPoint& p : region) {
        bool near = false;
        for (const QPoint& e : net)
            if (q_distance(e, p) < Rational(1)) near = true;
        CHECK(near);
    }
}

TEST_CASE("sphere coloring locate and color") {
    // S approaching 1 from below; the whole window sits in one net cell
    auto S = DistanceSet::approach_one();
    S.ensure(6);
    auto region = enumerate_qpoints(S, 3, 2);
    auto coloring = SphereColoring::over_region(Ladder::approach_one(), IndexPartition::mod(10), region);
    REQUIRE(coloring.net().size() == 1);
    CHECK(coloring.net()[0] == QPoint());

    auto loc0 = coloring.locate(QPoint());
    CHECK(loc0.index == 0);
    CHECK(coloring.color_of(QPoint()) == 0);

    // a point at distance exactly s_2 = 3/4 from the net point has index 2
    QPoint y = pt({{"3/4", 1}});
    CHECK(coloring.locate(y).index == 2);
    CHECK(coloring.color_of(y) == 2);

    // constant on each sphere shell around the net point
    QPoint y2 = pt({{"3/4", 2}, {"1/2", 1}});
    CHECK(coloring.locate(y2).index == 2);
    CHECK(coloring.color_of(y2) == coloring.color_of(y));
}

TEST_CASE("sphere coloring rejects points outside every cell") {
    auto ladder = Ladder::approach_one();
    std::vector<QPoint> net{QPoint()};
    SphereColoring coloring(std::move(ladder), net, IndexPartition::mod(3));
    CHECK_THROWS_AS(coloring.locate(pt({{"2", 1}})), Error); // distance 2 >= rho = 1
}

TEST_CASE("range witnesses for every color") {
    auto S = DistanceSet::approach_one();
    S.ensure(6);
    auto region = enumerate_qpoints(S, 3, 2);
    auto coloring = SphereColoring::over_region(Ladder::approach_one(), IndexPartition::mod(10), region);
    auto copy = IsometricCopy::identity();

    QPoint base = region[5];
    for (Nat j = 0; j < 10; ++j) {
        QPoint w = range_witness(copy, base, j, coloring);
        CHECK(coloring.color_of(w) == j);
    }
    // a point is its own witness for its own color
    QPoint self = range_witness(copy, base, coloring.color_of(base), coloring);
    CHECK(self == base);

    // finite ladder prefix: witnesses beyond it are refused
    auto short_ladder = Ladder::from_values({Rational(0), rat("1/2"), rat("3/4")});
    auto short_coloring = SphereColoring::over_region(std::move(short_ladder), IndexPartition::mod(10), region);
    CHECK_THROWS_AS(range_witness(copy, base, 7, short_coloring), Error);
}

TEST_CASE("smallness verdicts") {
    auto S = DistanceSet::finite({rat("1"), rat("1/2"), rat("1/4")});

    // radius 0: small iff the center misses A
    Ball point(pt({{"1", 1}}), Rational(0));
    auto v0 = is_small([](const QPoint&) { return false; }, point, S, 3);
    CHECK(v0.status == SmallnessVerdict::Status::Small);
    auto v1 = is_small([](const QPoint&) { return true; }, point, S, 3);
    CHECK(v1.status == SmallnessVerdict::Status::NotSmall);

    // A = everything: width witnesses in distinct children, pairwise at r
    Ball b(QPoint(), rat("1"));
    auto v2 = is_small([](const QPoint&) { return true; }, b, S, 4);
    REQUIRE(v2.status == SmallnessVerdict::Status::NotSmall);
    REQUIRE(v2.witnesses.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            CHECK(q_distance(v2.witnesses[i], v2.witnesses[j]) == rat("1"));

    // A concentrated in one child: small with one covering ball
    auto child0 = [](const QPoint& p) { return p.at(Rational(1)) == 0; };
    auto v3 = is_small(child0, b, S, 2);
    REQUIRE(v3.status == SmallnessVerdict::Status::Small);
    CHECK(v3.covering.size() == 1);
    CHECK(v3.covering[0].radius() == rat("1/2"));

    // budget too small: unknown
    ProbeBudget tiny;
    tiny.max_points = 3;
    auto v4 = is_small([](const QPoint&) { return true; }, b, S, 4, tiny);
    CHECK(v4.status == SmallnessVerdict::Status::Unknown);
}

TEST_CASE("greedy embedding") {
    auto S = DistanceSet::finite({rat("1"), rat("1/2")});

    // singleton target: any Y point
    auto anything = [](const QPoint&) { return true; };
    auto single = greedy_embed(anything, equilateral_space(1, rat("1")), S);
    REQUIRE(single.status == EngineStatus::Success);
    CHECK(single.built.size() == 1);

    // equilateral triple: three points pairwise at 1
    auto triple = greedy_embed(anything, equilateral_space(3, rat("1")), S);
    REQUIRE(triple.status == EngineStatus::Success);
    CHECK(embedding_matches(triple.built, equilateral_space(3, rat("1"))));

    // Y = one radius-1/2 ball cannot host a pair at distance 1: blocked with
    // a smallness certificate
    Ball host(QPoint(), rat("1/2"));
    auto in_host = [&host](const QPoint& p) { return host.contains(p); };
    auto blocked = greedy_embed(in_host, equilateral_space(2, rat("1")), S);
    REQUIRE(blocked.status == EngineStatus::Blocked);
    REQUIRE(blocked.blocking.has_value());
    CHECK(blocked.blocking->ball.radius() == rat("1"));
    CHECK(blocked.blocking->covering.size() == 1);
    CHECK(blocked.blocking->covering[0].radius() == rat("1/2"));

    // pool-based search stays inside the pool
    auto S2 = DistanceSet::finite({rat("1"), rat("1/2")});
    auto window = enumerate_qpoints(S2, 2, 3);
    std::vector<QPoint> pool(window.begin(), window.begin() + 5);
    auto pooled = greedy_embed(anything, equilateral_space(2, rat("1/2")), S2, {}, pool);
    REQUIRE(pooled.status == EngineStatus::Success);
    for (const QPoint& p : pooled.built)
        CHECK(std::find(pool.begin(), pool.end(), p) != pool.end());
}

TEST_CASE("pruning stabilizes") {
    auto S = DistanceSet::finite({rat("1"), rat("1/2")});
    Region region{2, 3};

    auto none = prune_sequence([](const QPoint&) { return false; }, S, region, 2);
    CHECK(none.stages == 0);
    CHECK(none.residue.empty());

    auto all = prune_sequence([](const QPoint&) { return true; }, S, region, 2);
    CHECK(all.stages == 0);
    CHECK(all.residue.size() == 9);

    // sparse diagonal: one child per ball; prunes to empty within depth stages
    auto diagonal = [](const QPoint& p) {
        return p.at(Rational(1)) == p.at(Rational(1, 2));
    };
    auto pruned = prune_sequence(diagonal, S, region, 2);
    CHECK(pruned.residue.empty());
    CHECK(pruned.stages >= 1);
    CHECK(pruned.stages <= 2);
    CHECK_FALSE(pruned.removals.empty());

    // residue is never small in a region ball it meets
    auto half = [](const QPoint& p) { return p.at(Rational(1)) % 2 == 0; };
    auto res = prune_sequence(half, S, region, 2);
    CHECK_FALSE(res.residue.empty());
    std::set<QPoint> residue(res.residue.begin(), res.residue.end());
    for (const QPoint& p : region_points(S, region))
        for (std::size_t i = 0; i < region.depth; ++i) {
            Ball b(p, S.value(i));
            std::set<Nat> children;
            bool meets = false;
            for (const QPoint& q : residue)
                if (b.contains(q)) {
                    meets = true;
                    children.insert(q.at(b.radius()));
                }
            if (meets) CHECK(children.size() >= 2);
        }
}

TEST_CASE("monochromatic copies") {
    auto S = DistanceSet::finite({rat("1"), rat("1/2"), rat("1/4")});
    Region region{3, 4};
    auto target = grid_space(S, 3, 2);

    auto constant = OracleColoring::constant(2, 0);
    auto r1 = monochromatic_copy(constant, target, S, region, 2);
    REQUIRE(r1.status == EngineStatus::Success);
    CHECK(r1.color == 0);
    CHECK(embedding_matches(r1.points, target));

    auto parity = OracleColoring::coordinate_mod(rat("1"), 2);
    auto r2 = monochromatic_copy(parity, target, S, region, 2);
    REQUIRE(r2.status == EngineStatus::Success);
    CHECK(embedding_matches(r2.points, target));
    for (const QPoint& p : r2.points) CHECK(parity(p) == r2.color);

    // a coloring whose classes all die over a tiny region reports guidance
    auto S2 = DistanceSet::finite({rat("1"), rat("1/2")});
    Region tiny{1, 2};
    auto stripes = OracleColoring::coordinate_mod(rat("1"), 2);
    auto t2 = grid_space(S2, 2, 2);
    CHECK_THROWS_WITH_AS(monochromatic_copy(stripes, t2, S2, tiny, 2),
                         doctest::Contains("enlarge the region"), Error);
}

TEST_CASE("ball covers") {
    auto f = BallCoverColoring::build(DistanceSet::halving(), 20);
    const auto& balls = f.balls();
    REQUIRE(balls.size() == 20);
    for (std::size_t n = 1; n < balls.size(); ++n) CHECK(balls[n].radius() < balls[n - 1].radius());

    // greedy seeding: the first enumerated point owns ball 0
    CHECK(f.color_of(QPoint()) == 0);
    CHECK(balls[0].contains(QPoint()));

    // same ball, same value, distance bounded by its radius
    auto S = DistanceSet::halving();
    auto window = enumerate_qpoints(S, 3, 3);
    for (const QPoint& p : window)
        for (const QPoint& q : window) {
            if (f.color_of(p) == 0 && f.color_of(q) == 0) CHECK(q_distance(p, q) <= balls[0].radius());
        }

    // disjointness over the window
    for (const QPoint& p : window) {
        int owners = 0;
        for (const Ball& b : balls)
            if (b.contains(p)) ++owners;
        CHECK(owners <= 1);
    }

    CHECK_THROWS_AS(BallCoverColoring::build(DistanceSet::finite({rat("1")}), 3), Error);
    CHECK_THROWS_AS(BallCoverColoring::build(DistanceSet::approach_one(), 3), Error);
}

TEST_CASE("cover colorings are neither constant nor injective on copies") {
    auto f = BallCoverColoring::build(DistanceSet::halving(), 10);
    auto copy = IsometricCopy::identity();
    auto en = PointEnumerator(DistanceSet::halving());
    auto samples = en.prefix(60);

    auto report = check_not_constant_not_injective(f, copy, samples);
    REQUIRE(report.complete);
    REQUIRE(report.same_ball.has_value());
    CHECK(f.color_of(report.same_ball->first) == f.color_of(report.same_ball->second));
    CHECK(report.same_ball_distance.is_positive());
    REQUIRE(report.distinct_balls.has_value());
    CHECK(report.distinct_values.first != report.distinct_values.second);

    auto starved = check_not_constant_not_injective(f, copy, {QPoint()});
    CHECK_FALSE(starved.complete);
}

TEST_CASE("almost finite range verdicts") {
    auto S = DistanceSet::halving();
    Ball b(QPoint(), rat("1"));
    auto everything = [](const QPoint&) { return true; };

    auto constant_f = [](const QPoint&) { return std::size_t(7); };
    auto v1 = almost_finite_range(constant_f, b, everything, 3, S);
    CHECK(v1.status == AfrVerdict::Status::AlmostFinite);
    CHECK(v1.excluded.empty());
    CHECK(v1.outside_values == std::vector<std::size_t>{7});

    // a cover coloring takes ever-new values inside any ball that holds
    // infinitely many cover balls
    auto cover = BallCoverColoring::build(DistanceSet::halving(), 30);
    auto cover_f = [&cover](const QPoint& p) { return cover.color_of(p); };
    AfrBudget strict;
    strict.range_bound = 2;
    strict.child_span = 6;
    auto v2 = almost_finite_range(cover_f, b, everything, 2, S, strict);
    CHECK(v2.status == AfrVerdict::Status::NotAlmostFinite);
    CHECK(v2.outside_values.size() > 2);

    AfrBudget tiny;
    tiny.max_points = 2;
    auto v3 = almost_finite_range(cover_f, b, everything, 2, S, tiny);
    CHECK(v3.status == AfrVerdict::Status::Unknown);
}

TEST_CASE("injective copies") {
    auto S = DistanceSet::finite({rat("1"), rat("1/2")});
    auto anything = [](const QPoint&) { return true; };

    // f reads the coordinate at 1/2; a pair at distance 1 gets distinct values
    auto coord = [](const QPoint& p) { return std::size_t(p.at(Rational(1, 2))); };
    EmbedBudget roomy;
    roomy.value_span = 12;
    auto pair = injective_copy(coord, anything, equilateral_space(2, rat("1")), S, roomy);
    REQUIRE(pair.status == EngineStatus::Success);
    CHECK(coord(pair.built[0]) != coord(pair.built[1]));

    // constant f: no fresh value exists; finite-range certificate
    auto constant_f = [](const QPoint&) { return std::size_t(3); };
    auto blocked = injective_copy(constant_f, anything, equilateral_space(2, rat("1")), S, roomy);
    REQUIRE(blocked.status == EngineStatus::Blocked);
    REQUIRE(blocked.blocking.has_value());
    CHECK_FALSE(blocked.blocking->used_values.empty());
    CHECK(blocked.blocking->used_values == std::vector<std::size_t>{3});

    // globally injective f reduces to plain embedding
    std::map<QPoint, std::size_t> ids;
    auto fresh = [&ids](const QPoint& p) {
        auto it = ids.find(p);
        if (it == ids.end()) it = ids.emplace(p, ids.size()).first;
        return it->second;
    };
    auto S2 = DistanceSet::finite({rat("1"), rat("1/2")});
    auto full = injective_copy(fresh, anything, grid_space(S2, 2, 2), S2, roomy);
    REQUIRE(full.status == EngineStatus::Success);
    std::set<std::size_t> values;
    for (const QPoint& p : full.built) values.insert(fresh(p));
    CHECK(values.size() == full.built.size());
}

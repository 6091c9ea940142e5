#pragma once

#include "qspace/ball.hpp"
#include "qspace/enumerate.hpp"
#include "qspace/smallness.hpp"
#include "qspace/sphere.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace qspace {

/// A family of pairwise disjoint balls covering Q_S with radii strictly
/// decreasing, built greedily along the canonical enumeration: whenever the
/// next enumerated point is uncovered it becomes the center of a new ball
/// whose radius lies strictly below all previous radii. Disjointness is then
/// automatic (a smaller ball meeting a larger one would sit inside it and its
/// center would have been covered). f(x) = the index of the ball holding x.
class BallCoverColoring {
public:
    /// Requires a decreasing generator (radii must keep shrinking); the
    /// intended sets decrease to 0. Materializes the first `count` balls.
    static BallCoverColoring build(DistanceSet S, std::size_t count);

    /// Ball index of x; extends the family lazily until x is covered. The
    /// scan cap guards runaway extension.
    std::size_t color_of(const QPoint& x, std::size_t scan_cap = 1000000);

    const std::vector<Ball>& balls() const { return balls_; }
    void ensure_balls(std::size_t count, std::size_t scan_cap = 1000000);

    PointEnumerator& enumerator() { return enumeration_; }

private:
    explicit BallCoverColoring(DistanceSet S);
    std::optional<std::size_t> lookup(const QPoint& x) const;
    void extend_once(std::size_t scan_cap);

    PointEnumerator enumeration_;
    std::vector<Ball> balls_;
    std::size_t cursor_ = 0; // next enumeration index to examine
};

/// Witnesses that a ball-cover coloring is neither injective nor constant on
/// a copy: a pair of copy points inside one ball (equal value at positive
/// distance) and a pair in distinct balls (different values). `complete` is
/// false when the sample was too small to produce both pairs.
struct CoverReport {
    bool complete = false;
    std::optional<std::pair<QPoint, QPoint>> same_ball;
    std::size_t same_ball_value = 0;
    Rational same_ball_distance;
    std::optional<std::pair<QPoint, QPoint>> distinct_balls;
    std::pair<std::size_t, std::size_t> distinct_values{0, 0};
    Rational distinct_ball_distance;
};

CoverReport check_not_constant_not_injective(BallCoverColoring& f, IsometricCopy& copy,
                                             const std::vector<QPoint>& sample_preimages);

struct AfrBudget {
    std::size_t max_points = 20000;
    Nat child_span = 8;
    std::size_t depth_below = 2;
    Nat value_span = 4;
    std::size_t range_bound = 8; // "finite range" cutoff for the probe window
};

/// Three-valued finitization of "f has almost finite range on b with respect
/// to Y": search for at most `width` radius r^- sub-balls whose removal
/// leaves at most range_bound distinct f-values among the probed points of
/// Y inside b.
struct AfrVerdict {
    enum class Status { AlmostFinite, NotAlmostFinite, Unknown };
    Status status = Status::Unknown;
    std::vector<Ball> excluded;               // chosen (c_i) family
    std::vector<std::size_t> outside_values;  // distinct values left outside it
    std::size_t probed = 0;
};

AfrVerdict almost_finite_range(const std::function<std::size_t(const QPoint&)>& f, const Ball& b,
                               const PointPredicate& Y, Nat width, DistanceSet& S,
                               const AfrBudget& budget = {});

} // namespace qspace

#pragma once

#include "qspace/ball.hpp"
#include "qspace/distance_set.hpp"
#include "qspace/qpoint.hpp"

#include <functional>
#include <vector>

namespace qspace {

using PointPredicate = std::function<bool(const QPoint&)>;

/// Probe window for smallness questions: which sub-ball coordinates get
/// scanned. The verdicts are exact relative to this window.
struct ProbeBudget {
    std::size_t max_points = 20000; // hard cap on probed points
    Nat child_span = 8;             // values tried at the radius coordinate
    std::size_t depth_below = 2;    // extra S levels below the radius
    Nat value_span = 4;             // values tried at those levels
};

/// Three-valued finitization of "A is small in b" (coverable by finitely
/// many radius r^- balls; for r = 0, empty intersection). NotSmall certifies
/// `width` points of A in pairwise distinct child balls, pairwise at distance
/// exactly r; Small certifies that the probe window was exhausted with all of
/// A's probed points inside at most width-1 child balls (listed); Unknown
/// means the point cap stopped the scan.
struct SmallnessVerdict {
    enum class Status { Small, NotSmall, Unknown };
    Status status = Status::Unknown;
    std::vector<Ball> covering;     // Small: child balls covering the probed points
    std::vector<QPoint> witnesses;  // NotSmall: width points in distinct children
    std::size_t probed = 0;
};

SmallnessVerdict is_small(const PointPredicate& A, const Ball& b, DistanceSet& S, Nat width,
                          const ProbeBudget& budget = {});

/// A finite window of the ball tree: all balls with radius among the top
/// `depth` distances centered at window points, over the depth x width
/// coordinate window.
struct Region {
    std::size_t depth = 3;
    Nat width = 3;
};

struct PruneResult {
    std::vector<QPoint> residue;
    std::size_t stages = 0; // iterations that removed at least one point
    struct Removal {
        std::size_t stage;
        Ball ball;
        std::size_t points_removed;
    };
    std::vector<Removal> removals;
};

/// Iterated removal of region balls in which the current set is small
/// (fewer than `smallness_width` child balls meet it), all small balls of a
/// stage removed simultaneously, until stabilization. Verdicts inside the
/// region are exact (full scans), so pruning never meets an Unknown. The
/// residue, when nonempty, meets at least smallness_width children of every
/// region ball it meets.
PruneResult prune_sequence(const PointPredicate& A, DistanceSet& S, const Region& region, Nat smallness_width);

/// The region's point window (enumerate_qpoints at the region's size).
std::vector<QPoint> region_points(DistanceSet& S, const Region& region);

} // namespace qspace

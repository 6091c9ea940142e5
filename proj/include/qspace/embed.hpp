#pragma once

#include "qspace/ball.hpp"
#include "qspace/coloring.hpp"
#include "qspace/smallness.hpp"
#include "qspace/space.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qspace {

struct EmbedBudget {
    Nat child_span = 8;             // values tried at the step radius
    std::size_t depth_below = 2;    // extra S levels probed below the radius
    Nat value_span = 6;             // values tried at those levels
    std::size_t max_candidates = 200000; // per-step scan cap
    std::size_t seed_scan = 4096;   // enumeration prefix scanned for the first point
};

/// Why a step could not be completed. The ball/covering pair is exactly a
/// smallness certificate for Y in the blocking ball; used_values is filled
/// instead when the obstruction was value freshness (injective runs), i.e. a
/// finite-range certificate for f on the step set.
struct BlockingCertificate {
    Ball ball;
    std::vector<Ball> covering;
    std::vector<std::size_t> used_values;
    std::string reason;
};

enum class EngineStatus { Success, Blocked, Unknown };

/// One construction step: the minimum distance from the next target point to
/// the built prefix and the indices realizing it.
struct StepRecord {
    Rational radius;
    std::vector<std::size_t> minimizers;
};

struct EmbedResult {
    EngineStatus status = EngineStatus::Unknown;
    std::vector<QPoint> built;
    std::vector<StepRecord> steps;
    std::optional<BlockingCertificate> blocking;
    std::size_t candidates_scanned = 0;
};

/// Builds points y_0, y_1, ... of Y with d(y_m, y_n) = target.dist(m, n),
/// target points taken in order. Each step forms the paper-shaped step set
/// (the radius-r ball around the minimizers minus their radius-r^- balls) and
/// scans it for a member of Y, either over the structural window given by the
/// budget or over `pool` when provided; every accepted point is re-verified
/// against the full distance profile. On success the whole matrix is
/// re-verified once more. A Blocked result carries the smallness certificate
/// for Y in the blocking ball.
EmbedResult greedy_embed(const PointPredicate& Y, const FiniteSpace& target, DistanceSet& S,
                         const EmbedBudget& budget = {},
                         const std::optional<std::vector<QPoint>>& pool = std::nullopt);

/// greedy_embed with the extra constraint that f takes a fresh value at every
/// new point; the result is re-verified to be isometric with f injective on
/// it. When a step set meets Y but offers no fresh value, the Blocked
/// certificate carries the used values (finite-range certificate).
EmbedResult injective_copy(const std::function<std::size_t(const QPoint&)>& f, const PointPredicate& Y,
                           const FiniteSpace& target, DistanceSet& S, const EmbedBudget& budget = {},
                           const std::optional<std::vector<QPoint>>& pool = std::nullopt);

/// Independent distance-matrix re-check.
bool embedding_matches(const std::vector<QPoint>& built, const FiniteSpace& target);

struct MonoResult {
    EngineStatus status = EngineStatus::Unknown;
    Nat color = 0;
    std::vector<QPoint> points;
    std::vector<std::size_t> residue_sizes; // per color class
    std::size_t prune_stages = 0;           // stages for the chosen class
    std::optional<BlockingCertificate> blocking;
};

/// Indivisibility engine: prunes every color class over the region, embeds
/// the target inside the class with the largest residue (ties toward the
/// smaller color), and re-verifies that the copy is isometric and
/// monochromatic. Throws with enlarge-region guidance when every class
/// prunes to empty; returns a non-Success status rather than an unverified
/// copy when budgets run out.
MonoResult monochromatic_copy(const OracleColoring& chi, const FiniteSpace& target, DistanceSet& S,
                              const Region& region, Nat smallness_width, const EmbedBudget& budget = {});

} // namespace qspace

#pragma once

#include "qspace/distance_set.hpp"
#include "qspace/qpoint.hpp"

#include <vector>

namespace qspace {

/// All points supported on the top `depth` materialized distances with values
/// < width, in lexicographic order (most significant digit = largest
/// coordinate). width^depth points; depth 0 yields the single empty map.
/// Materializes the set as needed.
std::vector<QPoint> enumerate_qpoints(DistanceSet& S, std::size_t depth, Nat width);

/// Canonical unbounded enumeration of Q_S: stage t lists the maps supported
/// on the top min(t, |S|) distances with values < t, lexicographically,
/// skipping points already listed by stage t-1. Every finitely supported map
/// appears exactly once.
class PointEnumerator {
public:
    explicit PointEnumerator(DistanceSet S) : S_(std::move(S)) {}

    /// The point at enumeration index i (memoized prefix).
    const QPoint& at(std::size_t i);

    /// Prefix of the first n points.
    std::vector<QPoint> prefix(std::size_t n);

    DistanceSet& distance_set() { return S_; }

private:
    void grow();

    DistanceSet S_;
    std::vector<QPoint> emitted_;
    std::size_t stage_ = 0;
};

} // namespace qspace

#pragma once

#include "qspace/rational.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qspace {

using Nat = std::uint32_t;

/// A point of Q_S: a finitely supported map S -> omega, stored as its support
/// in decreasing coordinate order. Equality is support equality; zero entries
/// are never stored.
class QPoint {
public:
    using Entry = std::pair<Rational, Nat>;

    QPoint() = default;

    /// Builds from arbitrary-order (coordinate, value) pairs; zero values are
    /// dropped, duplicate coordinates rejected.
    static QPoint from_pairs(std::vector<Entry> entries);

    /// Value at coordinate s (0 when outside the support).
    Nat at(const Rational& s) const;

    /// Copy with the coordinate at s set to v (v = 0 clears it).
    QPoint with(const Rational& s, Nat v) const;

    /// Copy keeping only coordinates for which `keep` holds.
    QPoint filtered(const std::function<bool(const Rational&)>& keep) const;

    bool empty() const { return support_.empty(); }
    std::size_t support_size() const { return support_.size(); }
    /// Support entries in strictly decreasing coordinate order.
    const std::vector<Entry>& support() const { return support_; }

    std::string str() const;

    friend bool operator==(const QPoint& a, const QPoint& b) { return a.support_ == b.support_; }
    friend bool operator!=(const QPoint& a, const QPoint& b) { return !(a == b); }
    /// Deterministic total order (coordinate-major lexicographic on the
    /// decreasing support); used for canonical choices, not for geometry.
    friend bool operator<(const QPoint& a, const QPoint& b) { return a.support_ < b.support_; }

private:
    std::vector<Entry> support_;
};

/// d(x,y) = max { s : x(s) != y(s) }, and 0 iff x = y.
Rational q_distance(const QPoint& x, const QPoint& y);

std::ostream& operator<<(std::ostream& os, const QPoint& p);

} // namespace qspace

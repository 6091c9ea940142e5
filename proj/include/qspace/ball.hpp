#pragma once

#include "qspace/distance_set.hpp"
#include "qspace/qpoint.hpp"

#include <iosfwd>
#include <vector>

namespace qspace {

/// Closed metric ball B(x,r) of Q_S. Nonempty balls have a unique radius and
/// every member is a center, so the stored center is canonical: the
/// coordinates at or below the radius are dropped, which is the
/// lexicographically least member.
class Ball {
public:
    Ball(const QPoint& center, Rational radius);

    const QPoint& center() const { return center_; }
    const Rational& radius() const { return radius_; }

    bool contains(const QPoint& y) const;

    friend bool operator==(const Ball& a, const Ball& b) {
        return a.radius_ == b.radius_ && a.center_ == b.center_;
    }
    friend bool operator!=(const Ball& a, const Ball& b) { return !(a == b); }
    friend bool operator<(const Ball& a, const Ball& b) {
        if (a.radius_ != b.radius_) return b.radius_ < a.radius_;
        return a.center_ < b.center_;
    }

private:
    QPoint center_;
    Rational radius_;
};

/// The `width` pairwise disjoint sub-balls of b with radius b.radius()^-,
/// obtained by varying the coordinate at the radius over 0..width-1. When the
/// radius is the minimum of a finite S there is no predecessor radius;
/// radius-0 singleton children are produced only when `zero_radius_fallback`
/// is set, otherwise this is an error.
std::vector<Ball> child_balls(const Ball& b, DistanceSet& S, Nat width, bool zero_radius_fallback = false);

std::ostream& operator<<(std::ostream& os, const Ball& b);

} // namespace qspace

#include "qspace/ball.hpp"

#include "qspace/error.hpp"

#include <ostream>

namespace qspace {

Ball::Ball(const QPoint& center, Rational radius) : radius_(std::move(radius)) {
    if (Rational(0) > radius_) throw Error("Ball: negative radius");
    center_ = center.filtered([&](const Rational& s) { return s > radius_; });
}

bool Ball::contains(const QPoint& y) const {
    return q_distance(center_, y) <= radius_;
}

std::vector<Ball> child_balls(const Ball& b, DistanceSet& S, Nat width, bool zero_radius_fallback) {
    const Rational& r = b.radius();
    if (!S.contains(r)) throw Error("child_balls: radius " + r.str() + " is not in S");
    auto below = S.pred(r);
    Rational child_radius(0);
    if (below) {
        child_radius = *below;
    } else if (!zero_radius_fallback) {
        throw Error("child_balls: " + r.str() + " has no predecessor in S");
    }
    std::vector<Ball> out;
    out.reserve(width);
    for (Nat k = 0; k < width; ++k) out.emplace_back(b.center().with(r, k), child_radius);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Ball& b) {
    return os << "B(" << b.center() << ", " << b.radius().str() << ")";
}

} // namespace qspace

#pragma once

#include "qspace/distance_set.hpp"
#include "qspace/qpoint.hpp"

#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace qspace {

/// A total point coloring QPoint -> {0..k-1} behind a deterministic oracle.
/// Evaluations are memoized (shared across copies) so verdicts derived from
/// the coloring are reproducible within a session.
class OracleColoring {
public:
    OracleColoring(Nat arity, std::function<Nat(const QPoint&)> eval);

    Nat arity() const { return arity_; }
    Nat operator()(const QPoint& x) const;

    std::size_t evaluations() const { return memo_->size(); }

    static OracleColoring constant(Nat arity, Nat value);
    /// x -> x(coordinate) mod modulus.
    static OracleColoring coordinate_mod(const Rational& coordinate, Nat modulus);
    /// Explicit table with a default for unlisted points (keeps totality).
    static OracleColoring table(Nat arity, std::map<QPoint, Nat> entries, Nat default_value);

private:
    Nat arity_;
    std::function<Nat(const QPoint&)> eval_;
    std::shared_ptr<std::map<QPoint, Nat>> memo_;
};

/// Coordinate restriction f(x) = 1_{S'} x: keeps exactly the coordinates
/// lying in S'. Distances with value in S' are preserved by f.
QPoint restrict_point(const QPoint& x, DistanceSet& S_prime);

/// Lift of a point coloring over Q_{S'} to Q_S along the restriction map.
OracleColoring lift_point_coloring(const OracleColoring& chi_prime, DistanceSet S_prime);

/// Lift of a copy coloring: colors a tuple of Q_S points by applying the
/// S'-coloring to their restrictions. Throws when some pairwise distance of
/// the tuple lies outside S' (the restriction is not isometric there).
std::function<Nat(const std::vector<QPoint>&)>
lift_copy_coloring(std::function<Nat(const std::vector<QPoint>&)> chi_prime, DistanceSet S_prime);

} // namespace qspace

#pragma once

#include "qspace/coloring.hpp"
#include "qspace/distance_set.hpp"
#include "qspace/qpoint.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace qspace {

/// Strictly increasing sequence s_0 = 0 < s_1 < s_2 < ... with s_i in S for
/// i > 0, materialized lazily when generator backed. The supremum is either a
/// known finite value or unbounded.
class Ladder {
public:
    using Rule = std::function<Rational(std::size_t)>; // i >= 1 -> s_i

    static Ladder from_values(std::vector<Rational> values);
    static Ladder generated(Rule rule, std::optional<Rational> sup);
    /// s_i = 1 - 2^-i for i >= 1, sup = 1.
    static Ladder approach_one();

    /// s_i, materializing as needed; throws when a finite ladder runs out.
    const Rational& value(std::size_t i);
    std::size_t materialized_count() const { return values_.size(); }
    bool extensible() const { return static_cast<bool>(rule_); }

    /// Finite supremum, or nullopt for unbounded ladders.
    const std::optional<Rational>& sup() const { return sup_; }

    /// Largest i with s_i <= d (well defined for d < sup). Extends the ladder
    /// until s_{i+1} > d.
    std::size_t interval_index(const Rational& d);

private:
    Ladder() = default;
    std::vector<Rational> values_; // values_[0] = 0
    Rule rule_;
    std::optional<Rational> sup_;
};

/// A partition of omega into infinite classes (A_j), stored as a computable
/// rule: either index mod J (J classes) or the first component of the Cantor
/// pairing (omega many classes).
class IndexPartition {
public:
    static IndexPartition mod(Nat classes);
    static IndexPartition pairing();

    Nat class_of(std::size_t index) const;
    /// Least member of class j strictly above `bound`.
    std::size_t least_in_class_above(Nat j, std::size_t bound) const;
    /// Number of classes, or nullopt for omega many.
    std::optional<Nat> class_count() const { return classes_; }

private:
    explicit IndexPartition(std::optional<Nat> classes) : classes_(classes) {}
    std::optional<Nat> classes_; // nullopt = pairing rule
};

/// Greedy maximal rho-separated net over the region: scans the region in
/// order and keeps every point at distance >= rho from all kept points. With
/// unbounded sup (rho = infinity) the net is a single point. Every region
/// point ends up within distance < rho of exactly one net point.
std::vector<QPoint> build_separated_net(const Ladder& ladder, const std::vector<QPoint>& region);

/// The dividing coloring built from a ladder, a separated net and an index
/// partition: a point y is colored by the partition class of the ladder
/// interval [s_i, s_{i+1}) holding d(e(y), y), where e(y) is the unique net
/// point within < rho.
class SphereColoring {
public:
    SphereColoring(Ladder ladder, std::vector<QPoint> net, IndexPartition parts);

    /// Builds the net greedily over `region`.
    static SphereColoring over_region(Ladder ladder, IndexPartition parts, const std::vector<QPoint>& region);

    struct Location {
        QPoint net_point;
        std::size_t index; // ladder interval index
    };

    /// The unique (net point, interval index) pair for y. Throws when y lies
    /// outside every net cell (region too small), never guesses.
    Location locate(const QPoint& y);

    Nat color_of(const QPoint& y);

    const std::vector<QPoint>& net() const { return net_; }
    Ladder& ladder() { return ladder_; }
    const IndexPartition& partition() const { return parts_; }

private:
    Ladder ladder_;
    std::vector<QPoint> net_;
    IndexPartition parts_;
};

/// An isometric embedding of Q_S into itself, given as a function. The
/// identity is the canonical example; the engine only ever evaluates it.
struct IsometricCopy {
    std::function<QPoint(const QPoint&)> map;
    static IsometricCopy identity();
};

/// A point of the copy with color j: picks a ladder index i_j in class j
/// beyond i(y) + 1, asks the copy for a point at distance s_{i_j} from
/// y = copy(preimage) (shifting the preimage coordinate at s_{i_j}), and
/// re-verifies the color of the result. The isosceles law makes the color
/// certain; the verification is still recomputed. Returns y itself when it
/// already has color j.
QPoint range_witness(IsometricCopy& copy, const QPoint& preimage, Nat j, SphereColoring& coloring);

} // namespace qspace

#include "qspace/sphere.hpp"

#include "qspace/error.hpp"

#include <algorithm>

namespace qspace {

Ladder Ladder::from_values(std::vector<Rational> values) {
    if (values.empty() || !values[0].is_zero()) throw Error("Ladder: first value must be 0");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i - 1] < values[i])) throw Error("Ladder: values must strictly increase");
    Ladder l;
    l.values_ = std::move(values);
    if (l.values_.size() >= 2) l.sup_ = l.values_.back(); // conservative: no rule to pass it
    return l;
}

Ladder Ladder::generated(Rule rule, std::optional<Rational> sup) {
    Ladder l;
    l.values_.push_back(Rational(0));
    l.rule_ = std::move(rule);
    l.sup_ = std::move(sup);
    l.value(1);
    return l;
}

Ladder Ladder::approach_one() {
    return generated([](std::size_t i) { return Rational(1) - Rational::pow2(static_cast<unsigned>(i)); },
                     Rational(1));
}

const Rational& Ladder::value(std::size_t i) {
    while (values_.size() <= i) {
        if (!rule_) throw Error("Ladder: prefix too short (materialized " +
                                std::to_string(values_.size()) + ", asked for index " + std::to_string(i) + ")");
        Rational next = rule_(values_.size());
        if (!(values_.back() < next)) throw Error("Ladder: rule produced a non-increasing value");
        if (sup_ && !(next < *sup_)) throw Error("Ladder: rule produced a value at or above the supremum");
        values_.push_back(std::move(next));
    }
    return values_[i];
}

std::size_t Ladder::interval_index(const Rational& d) {
    if (d < Rational(0)) throw Error("Ladder: negative distance");
    if (sup_ && !(d < *sup_)) throw Error("Ladder: distance " + d.str() + " is not below the supremum");
    std::size_t i = 0;
    while (true) {
        if (values_.size() <= i + 1) {
            if (!rule_) {
                if (values_.back() <= d)
                    throw Error("Ladder: prefix too short to place distance " + d.str());
            }
            value(i + 1);
        }
        if (d < values_[i + 1]) return i;
        ++i;
    }
}

IndexPartition IndexPartition::mod(Nat classes) {
    if (classes == 0) throw Error("IndexPartition: need at least one class");
    return IndexPartition(classes);
}

IndexPartition IndexPartition::pairing() {
    return IndexPartition(std::nullopt);
}

Nat IndexPartition::class_of(std::size_t index) const {
    if (classes_) return static_cast<Nat>(index % *classes_);
    // Cantor pairing: index = (a+b)(a+b+1)/2 + b encodes (a, b); the class is a.
    std::size_t w = 0;
    while ((w + 1) * (w + 2) / 2 <= index) ++w;
    std::size_t b = index - w * (w + 1) / 2;
    return static_cast<Nat>(w - b);
}

std::size_t IndexPartition::least_in_class_above(Nat j, std::size_t bound) const {
    for (std::size_t i = bound + 1;; ++i)
        if (class_of(i) == j) return i;
}

std::vector<QPoint> build_separated_net(const Ladder& ladder, const std::vector<QPoint>& region) {
    std::vector<QPoint> net;
    if (region.empty()) return net;
    if (!ladder.sup()) {
        net.push_back(region.front());
        return net;
    }
    const Rational& rho = *ladder.sup();
    for (const QPoint& p : region) {
        bool separated = true;
        for (const QPoint& e : net)
            if (q_distance(e, p) < rho) {
                separated = false;
                break;
            }
        if (separated) net.push_back(p);
    }
    return net;
}

SphereColoring::SphereColoring(Ladder ladder, std::vector<QPoint> net, IndexPartition parts)
    : ladder_(std::move(ladder)), net_(std::move(net)), parts_(parts) {
    if (net_.empty()) throw Error("SphereColoring: empty net");
}

SphereColoring SphereColoring::over_region(Ladder ladder, IndexPartition parts,
                                           const std::vector<QPoint>& region) {
    auto net = build_separated_net(ladder, region);
    return SphereColoring(std::move(ladder), std::move(net), parts);
}

SphereColoring::Location SphereColoring::locate(const QPoint& y) {
    const QPoint* found = nullptr;
    Rational found_d(0);
    for (const QPoint& e : net_) {
        Rational d = q_distance(e, y);
        bool close = ladder_.sup() ? (d < *ladder_.sup()) : true;
        if (close) {
            if (found) throw Error("SphereColoring::locate: two net points within rho of the same point");
            found = &e;
            found_d = d;
            if (!ladder_.sup()) break; // rho = infinity: the singleton net point
        }
    }
    if (!found) throw Error("SphereColoring::locate: point " + y.str() +
                            " lies outside every net cell (region too small)");
    return Location{*found, ladder_.interval_index(found_d)};
}

Nat SphereColoring::color_of(const QPoint& y) {
    return parts_.class_of(locate(y).index);
}

IsometricCopy IsometricCopy::identity() {
    return IsometricCopy{[](const QPoint& x) { return x; }};
}

QPoint range_witness(IsometricCopy& copy, const QPoint& preimage, Nat j, SphereColoring& coloring) {
    if (auto count = coloring.partition().class_count(); count && j >= *count)
        throw Error("range_witness: color outside the partition");
    QPoint y = copy.map(preimage);
    if (coloring.color_of(y) == j) return y;

    std::size_t base = coloring.locate(y).index;
    std::size_t target = coloring.partition().least_in_class_above(j, base + 1);
    const Rational& s = coloring.ladder().value(target); // may throw: prefix too short
    QPoint shifted = preimage.with(s, preimage.at(s) + 1);
    QPoint witness = copy.map(shifted);

    // Recomputed verification, not trusted from the construction.
    if (q_distance(y, witness) != s)
        throw Error("range_witness: copy is not isometric at distance " + s.str());
    if (coloring.color_of(witness) != j)
        throw Error("range_witness: witness failed color re-verification");
    return witness;
}

} // namespace qspace

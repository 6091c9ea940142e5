#include "qspace/distance_set.hpp"

#include "qspace/error.hpp"

#include <algorithm>

namespace qspace {

DistanceSet DistanceSet::finite(std::vector<Rational> values) {
    DistanceSet s;
    std::sort(values.begin(), values.end(), [](const Rational& a, const Rational& b) { return b < a; });
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i].is_positive()) throw Error("DistanceSet: values must be positive");
        if (i > 0 && !(values[i] < values[i - 1])) throw Error("DistanceSet: duplicate value " + values[i].str());
    }
    s.sorted_ = std::move(values);
    return s;
}

DistanceSet DistanceSet::generated(Generator rule, Trend trend, std::size_t prematerialize) {
    DistanceSet s;
    s.rule_ = std::move(rule);
    s.trend_ = trend;
    s.ensure(std::max<std::size_t>(prematerialize, 1));
    return s;
}

DistanceSet DistanceSet::halving() {
    return generated([](std::size_t i) { return Rational::pow2(static_cast<unsigned>(i)); }, Trend::Decreasing);
}

DistanceSet DistanceSet::approach_one() {
    return generated([](std::size_t i) { return Rational(1) - Rational::pow2(static_cast<unsigned>(i) + 1); },
                     Trend::Increasing);
}

void DistanceSet::push_generated() {
    Rational v = rule_(generated_);
    ++generated_;
    if (!v.is_positive()) throw Error("DistanceSet: generator produced a non-positive value");
    if (!sorted_.empty()) {
        if (*trend_ == Trend::Decreasing) {
            if (!(v < sorted_.back()))
                throw Error("DistanceSet: decreasing generator produced " + v.str() + " not below " +
                            sorted_.back().str());
            sorted_.push_back(std::move(v));
            return;
        }
        if (!(sorted_.front() < v))
            throw Error("DistanceSet: increasing generator produced " + v.str() + " not above " +
                        sorted_.front().str());
        sorted_.insert(sorted_.begin(), std::move(v));
        return;
    }
    sorted_.push_back(std::move(v));
}

std::size_t DistanceSet::ensure(std::size_t count) {
    if (!rule_) return sorted_.size();
    while (sorted_.size() < count) push_generated();
    return sorted_.size();
}

const Rational& DistanceSet::value(std::size_t i) const {
    if (i >= sorted_.size()) throw Error("DistanceSet: value index beyond materialized prefix");
    return sorted_[i];
}

Rational DistanceSet::min_materialized() const {
    if (sorted_.empty()) throw Error("DistanceSet: empty");
    return sorted_.back();
}

Rational DistanceSet::max_materialized() const {
    if (sorted_.empty()) throw Error("DistanceSet: empty");
    return sorted_.front();
}

bool DistanceSet::contains(const Rational& s) {
    if (!s.is_positive()) return false;
    auto present = [&] {
        return std::binary_search(sorted_.begin(), sorted_.end(), s,
                                  [](const Rational& a, const Rational& b) { return b < a; });
    };
    if (present()) return true;
    if (!rule_) return false;
    // Monotone extension until the generator has passed s in its direction.
    for (std::size_t step = 0; step < kExtensionCap; ++step) {
        if (*trend_ == Trend::Decreasing && sorted_.back() < s) return false;
        if (*trend_ == Trend::Increasing && s < sorted_.front()) return false;
        push_generated();
        if (present()) return true;
    }
    throw Error("DistanceSet: membership of " + s.str() + " undecided after extension cap");
}

std::optional<Rational> DistanceSet::pred(const Rational& s) {
    std::size_t i = index_of(s);
    if (i + 1 < sorted_.size()) return sorted_[i + 1];
    if (!rule_ || *trend_ == Trend::Increasing) return std::nullopt;
    push_generated();
    return sorted_.back();
}

std::size_t DistanceSet::index_of(const Rational& s) {
    if (!contains(s)) throw Error("DistanceSet: " + s.str() + " is not a member");
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), s,
                               [](const Rational& a, const Rational& b) { return b < a; });
    return static_cast<std::size_t>(it - sorted_.begin());
}

} // namespace qspace

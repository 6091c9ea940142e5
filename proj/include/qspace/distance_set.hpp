#pragma once

#include "qspace/rational.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace qspace {

/// Monotonicity promise for a generator rule. Decreasing generators describe
/// reverse-well-ordered distance sets (each new value lies strictly below all
/// previous ones); increasing generators describe sets like {1 - 2^-i} that
/// are not reverse-well-ordered.
enum class Trend { Decreasing, Increasing };

/// The set S of admissible distances, canonically viewed in decreasing order
/// s_0 > s_1 > ... A set is either finite or backed by an injective generator
/// rule i -> s_i, materialized lazily. The materialized view is always the
/// sorted-decreasing sequence of values produced so far; for monotone
/// generators adjacency in that view is final, so predecessors computed from
/// it never change as more values appear.
class DistanceSet {
public:
    using Generator = std::function<Rational(std::size_t)>;

    static DistanceSet finite(std::vector<Rational> values);
    static DistanceSet generated(Generator rule, Trend trend, std::size_t prematerialize = 1);

    /// 2^-i: 1, 1/2, 1/4, ... (decreasing to 0).
    static DistanceSet halving();
    /// 1 - 2^-(i+1): 1/2, 3/4, 7/8, ... (increasing to 1).
    static DistanceSet approach_one();

    bool is_finite() const { return !rule_; }
    std::optional<Trend> trend() const { return trend_; }

    std::size_t materialized_count() const { return sorted_.size(); }
    /// Strictly decreasing materialized values.
    const std::vector<Rational>& materialized() const { return sorted_; }

    /// Materializes until at least `count` values are available (finite sets
    /// cap at their size). Returns the number available.
    std::size_t ensure(std::size_t count);

    /// i-th largest materialized value.
    const Rational& value(std::size_t i) const;

    Rational min_materialized() const;
    Rational max_materialized() const;

    /// Exact membership; extends monotone generators until decidable.
    bool contains(const Rational& s);

    /// s^- = max { t in S : t < s }. Requires s in S. Returns nullopt when no
    /// member of S lies below s (finite minimum, or the base of an increasing
    /// generator).
    std::optional<Rational> pred(const Rational& s);

    /// Index of s in the materialized decreasing view; extends membership
    /// search like contains(). Throws if s is not a member.
    std::size_t index_of(const Rational& s);

private:
    DistanceSet() = default;
    void push_generated();

    std::vector<Rational> sorted_;      // strictly decreasing
    Generator rule_;                    // null for finite sets
    std::optional<Trend> trend_;
    std::size_t generated_ = 0;         // how many rule indices consumed

    static constexpr std::size_t kExtensionCap = 4096;
};

} // namespace qspace

#include "qspace/cover.hpp"

#include "qspace/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qspace {

BallCoverColoring::BallCoverColoring(DistanceSet S) : enumeration_(std::move(S)) {}

BallCoverColoring BallCoverColoring::build(DistanceSet S, std::size_t count) {
    if (S.is_finite() || S.trend() != Trend::Decreasing)
        throw Error("BallCoverColoring: needs a decreasing generator (radii must shrink forever)");
    BallCoverColoring f(std::move(S));
    f.ensure_balls(count);
    return f;
}

std::optional<std::size_t> BallCoverColoring::lookup(const QPoint& x) const {
    for (std::size_t n = 0; n < balls_.size(); ++n)
        if (balls_[n].contains(x)) return n;
    return std::nullopt;
}

void BallCoverColoring::extend_once(std::size_t scan_cap) {
    DistanceSet& S = enumeration_.distance_set();
    for (std::size_t guard = 0; guard < scan_cap; ++guard) {
        const QPoint& p = enumeration_.at(cursor_++);
        if (lookup(p)) continue;
        // Radius strictly below every previous radius: the next generated
        // value past s_0 works because radii are drawn in generation order.
        S.ensure(balls_.size() + 2);
        balls_.emplace_back(p, S.value(balls_.size() + 1));
        return;
    }
    throw Error("BallCoverColoring: scan cap reached while extending the cover");
}

void BallCoverColoring::ensure_balls(std::size_t count, std::size_t scan_cap) {
    while (balls_.size() < count) extend_once(scan_cap);
}

std::size_t BallCoverColoring::color_of(const QPoint& x, std::size_t scan_cap) {
    for (std::size_t guard = 0;; ++guard) {
        if (auto n = lookup(x)) return *n;
        if (guard >= scan_cap) throw Error("BallCoverColoring: scan cap reached while coloring a point");
        extend_once(scan_cap);
    }
}

CoverReport check_not_constant_not_injective(BallCoverColoring& f, IsometricCopy& copy,
                                             const std::vector<QPoint>& sample_preimages) {
    CoverReport report;
    std::vector<QPoint> points;
    std::vector<std::size_t> values;
    points.reserve(sample_preimages.size());
    for (const QPoint& pre : sample_preimages) {
        points.push_back(copy.map(pre));
        values.push_back(f.color_of(points.back()));
    }
    for (std::size_t i = 0; i < points.size() && !(report.same_ball && report.distinct_balls); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) continue;
            if (!report.same_ball && values[i] == values[j]) {
                report.same_ball = {points[i], points[j]};
                report.same_ball_value = values[i];
                report.same_ball_distance = q_distance(points[i], points[j]);
            }
            if (!report.distinct_balls && values[i] != values[j]) {
                report.distinct_balls = {points[i], points[j]};
                report.distinct_values = {values[i], values[j]};
                report.distinct_ball_distance = q_distance(points[i], points[j]);
            }
        }
    report.complete = report.same_ball.has_value() && report.distinct_balls.has_value();
    return report;
}

AfrVerdict almost_finite_range(const std::function<std::size_t(const QPoint&)>& f, const Ball& b,
                               const PointPredicate& Y, Nat width, DistanceSet& S, const AfrBudget& budget) {
    AfrVerdict verdict;
    if (b.radius().is_zero()) throw Error("almost_finite_range: needs a positive radius");
    if (!S.contains(b.radius())) throw Error("almost_finite_range: radius not in S");
    const Rational r = b.radius();
    auto below = S.pred(r);
    Rational child_radius = below ? *below : Rational(0);

    // Probe Y inside b, recording the f-values seen per child ball.
    std::vector<Rational> coords{r};
    {
        Rational cur = r;
        for (std::size_t i = 0; i < budget.depth_below; ++i) {
            auto deeper = S.pred(cur);
            if (!deeper) break;
            cur = *deeper;
            coords.push_back(cur);
        }
    }
    std::map<Nat, std::set<std::size_t>> child_values;
    std::map<Nat, QPoint> child_rep;
    std::vector<Nat> digits(coords.size(), 0);
    bool exhausted = true;
    std::size_t scanned = 0;
    while (true) {
        if (scanned >= budget.max_points) {
            exhausted = false;
            break;
        }
        QPoint cand = b.center();
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (digits[i] != 0) cand = cand.with(coords[i], digits[i]);
        ++scanned;
        if (Y(cand)) {
            child_values[digits[0]].insert(f(cand));
            child_rep.emplace(digits[0], cand);
        }
        std::size_t i = coords.size();
        bool wrapped = false;
        while (i-- > 0) {
            Nat limit = (i == 0) ? budget.child_span : budget.value_span;
            if (++digits[i] < limit) break;
            digits[i] = 0;
            if (i == 0) wrapped = true;
        }
        if (wrapped) break;
    }
    verdict.probed = scanned;

    // Exact search over the probed data: smallest exclusion family (up to
    // `width` children) leaving at most range_bound distinct values outside.
    std::vector<Nat> children;
    for (const auto& [child, vals] : child_values) children.push_back(child);
    const std::size_t max_excl = std::min<std::size_t>(width, children.size());

    auto outside_of = [&](const std::vector<Nat>& chosen) {
        std::set<std::size_t> outside;
        for (const auto& [child, vals] : child_values)
            if (std::find(chosen.begin(), chosen.end(), child) == chosen.end())
                outside.insert(vals.begin(), vals.end());
        return outside;
    };

    std::vector<Nat> best_exclusion;
    std::set<std::size_t> best_outside;
    bool found = false;
    for (std::size_t sz = 0; sz <= max_excl && !found; ++sz) {
        std::vector<Nat> chosen;
        std::function<void(std::size_t)> search = [&](std::size_t from) {
            if (found) return;
            if (chosen.size() == sz) {
                auto outside = outside_of(chosen);
                if (outside.size() <= budget.range_bound) {
                    best_exclusion = chosen;
                    best_outside = std::move(outside);
                    found = true;
                }
                return;
            }
            for (std::size_t i = from; i < children.size() && !found; ++i) {
                chosen.push_back(children[i]);
                search(i + 1);
                chosen.pop_back();
            }
        };
        search(0);
    }
    if (!found) {
        // Report the best width-sized exclusion anyway so the verdict carries
        // the surviving values.
        std::vector<Nat> chosen;
        std::set<std::size_t> best;
        bool have = false;
        std::function<void(std::size_t)> search = [&](std::size_t from) {
            if (chosen.size() == max_excl) {
                auto outside = outside_of(chosen);
                if (!have || outside.size() < best.size()) {
                    best = std::move(outside);
                    best_exclusion = chosen;
                    have = true;
                }
                return;
            }
            for (std::size_t i = from; i < children.size(); ++i) {
                chosen.push_back(children[i]);
                search(i + 1);
                chosen.pop_back();
            }
        };
        search(0);
        best_outside = std::move(best);
    }

    verdict.outside_values.assign(best_outside.begin(), best_outside.end());
    if (found) {
        verdict.status = exhausted ? AfrVerdict::Status::AlmostFinite : AfrVerdict::Status::Unknown;
        for (Nat child : best_exclusion) verdict.excluded.emplace_back(child_rep.at(child), child_radius);
        return verdict;
    }
    verdict.status = exhausted ? AfrVerdict::Status::NotAlmostFinite : AfrVerdict::Status::Unknown;
    return verdict;
}

} // namespace qspace

#include "qspace/smallness.hpp"

#include "qspace/enumerate.hpp"
#include "qspace/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qspace {

namespace {

// Coordinates probed inside a ball of radius r: r itself plus up to
// depth_below further S values beneath it.
std::vector<Rational> probe_coordinates(DistanceSet& S, const Rational& r, std::size_t depth_below) {
    std::vector<Rational> coords{r};
    Rational cur = r;
    for (std::size_t i = 0; i < depth_below; ++i) {
        auto below = S.pred(cur);
        if (!below) break;
        cur = *below;
        coords.push_back(cur);
    }
    return coords;
}

} // namespace

SmallnessVerdict is_small(const PointPredicate& A, const Ball& b, DistanceSet& S, Nat width,
                          const ProbeBudget& budget) {
    if (width == 0) throw Error("is_small: width must be positive");
    SmallnessVerdict verdict;

    if (b.radius().is_zero()) {
        // Radius-0 balls are singletons: small exactly when the center avoids A.
        verdict.probed = 1;
        if (A(b.center())) {
            verdict.status = SmallnessVerdict::Status::NotSmall;
            verdict.witnesses = {b.center()};
        } else {
            verdict.status = SmallnessVerdict::Status::Small;
        }
        return verdict;
    }
    if (!S.contains(b.radius())) throw Error("is_small: radius " + b.radius().str() + " is not in S");

    const Rational r = b.radius();
    auto coords = probe_coordinates(S, r, budget.depth_below);
    Rational child_radius = coords.size() > 1 ? coords[1] : Rational(0);

    std::map<Nat, QPoint> bucket_rep; // child index (value at r) -> first A-point seen
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
        if (A(cand)) {
            Nat child = digits[0];
            bucket_rep.emplace(child, cand);
            if (bucket_rep.size() >= width) break;
        }
        // odometer: coordinate at r is the most significant digit
        std::size_t i = coords.size();
        while (i-- > 0) {
            Nat limit = (i == 0) ? budget.child_span : budget.value_span;
            if (++digits[i] < limit) break;
            digits[i] = 0;
            if (i == 0) {
                i = coords.size(); // signal wrap-around: scan complete
                break;
            }
        }
        if (i == coords.size()) break;
    }
    verdict.probed = scanned;

    if (bucket_rep.size() >= width) {
        verdict.status = SmallnessVerdict::Status::NotSmall;
        for (const auto& [child, rep] : bucket_rep) verdict.witnesses.push_back(rep);
        // Witness sanity: pairwise distance exactly r.
        for (std::size_t i = 0; i < verdict.witnesses.size(); ++i)
            for (std::size_t j = i + 1; j < verdict.witnesses.size(); ++j)
                if (q_distance(verdict.witnesses[i], verdict.witnesses[j]) != r)
                    throw Error("is_small: internal error, witnesses not at distance r");
        return verdict;
    }
    if (!exhausted) {
        verdict.status = SmallnessVerdict::Status::Unknown;
        return verdict;
    }
    verdict.status = SmallnessVerdict::Status::Small;
    for (const auto& [child, rep] : bucket_rep) verdict.covering.emplace_back(rep, child_radius);
    return verdict;
}

std::vector<QPoint> region_points(DistanceSet& S, const Region& region) {
    return enumerate_qpoints(S, region.depth, region.width);
}

PruneResult prune_sequence(const PointPredicate& A, DistanceSet& S, const Region& region, Nat smallness_width) {
    if (smallness_width == 0) throw Error("prune_sequence: smallness width must be positive");
    auto window = region_points(S, region);

    std::set<QPoint> current;
    for (const QPoint& p : window)
        if (A(p)) current.insert(p);

    // Region balls, deduped through canonical equality.
    std::set<Ball> balls;
    for (const QPoint& p : window)
        for (std::size_t i = 0; i < region.depth; ++i) balls.emplace(p, S.value(i));

    PruneResult result;
    while (true) {
        // All balls small for the current set, evaluated simultaneously.
        std::vector<const Ball*> small;
        for (const Ball& b : balls) {
            std::set<Nat> children;
            bool meets = false;
            for (const QPoint& p : current)
                if (b.contains(p)) {
                    meets = true;
                    children.insert(p.at(b.radius()));
                    if (children.size() >= smallness_width) break;
                }
            if (meets && children.size() < smallness_width) small.push_back(&b);
        }
        std::size_t removed_total = 0;
        for (const Ball* b : small) {
            std::size_t removed_here = 0;
            for (auto it = current.begin(); it != current.end();) {
                if (b->contains(*it)) {
                    it = current.erase(it);
                    ++removed_here;
                } else {
                    ++it;
                }
            }
            if (removed_here > 0) result.removals.push_back({result.stages + 1, *b, removed_here});
            removed_total += removed_here;
        }
        if (removed_total == 0) break;
        ++result.stages;
    }
    result.residue.assign(current.begin(), current.end());
    return result;
}

} // namespace qspace

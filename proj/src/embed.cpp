#include "qspace/embed.hpp"

#include "qspace/enumerate.hpp"
#include "qspace/error.hpp"

#include <algorithm>
#include <set>

namespace qspace {

bool embedding_matches(const std::vector<QPoint>& built, const FiniteSpace& target) {
    if (built.size() != target.size()) return false;
    for (std::size_t i = 0; i < built.size(); ++i)
        for (std::size_t j = 0; j < built.size(); ++j) {
            Rational want = target.dist(i, j);
            if (q_distance(built[i], built[j]) != want) return false;
        }
    return true;
}

namespace {

struct Engine {
    const PointPredicate& Y;
    const FiniteSpace& target;
    DistanceSet& S;
    const EmbedBudget& budget;
    const std::optional<std::vector<QPoint>>& pool;
    const std::function<std::size_t(const QPoint&)>* f = nullptr; // value-freshness constraint

    EmbedResult result;
    std::vector<std::size_t> used_values;

    bool profile_ok(const QPoint& cand, std::size_t next) const {
        for (std::size_t n = 0; n < next; ++n)
            if (q_distance(cand, result.built[n]) != target.dist(next, n)) return false;
        return true;
    }

    bool fresh_value(const QPoint& cand) const {
        if (!f) return true;
        std::size_t v = (*f)(cand);
        return std::find(used_values.begin(), used_values.end(), v) == used_values.end();
    }

    void accept(const QPoint& cand) {
        if (f) used_values.push_back((*f)(cand));
        result.built.push_back(cand);
    }

    // First point: anything in Y.
    bool seed() {
        if (pool) {
            for (const QPoint& p : *pool) {
                ++result.candidates_scanned;
                if (Y(p) && fresh_value(p)) {
                    accept(p);
                    return true;
                }
            }
        } else {
            PointEnumerator en(S);
            for (std::size_t i = 0; i < budget.seed_scan; ++i) {
                const QPoint& p = en.at(i);
                ++result.candidates_scanned;
                if (Y(p) && fresh_value(p)) {
                    accept(p);
                    return true;
                }
            }
        }
        S.ensure(1);
        result.status = EngineStatus::Blocked;
        result.blocking = BlockingCertificate{Ball(QPoint(), S.value(0)), {}, used_values,
                                              "no admissible point of Y in the probed region"};
        return false;
    }

    // Step k+1: the paper-shaped step set around the minimizers.
    bool step(std::size_t next) {
        Rational r = target.dist(next, 0);
        std::vector<std::size_t> minimizers;
        for (std::size_t n = 0; n < next; ++n) {
            Rational d = target.dist(next, n);
            if (d < r) r = d;
        }
        for (std::size_t n = 0; n < next; ++n)
            if (target.dist(next, n) == r) minimizers.push_back(n);
        result.steps.push_back({r, minimizers});

        const QPoint& anchor = result.built[minimizers.front()];
        Ball b(anchor, r);
        auto below = S.pred(r);
        Rational excl_radius = below ? *below : Rational(0);

        bool saw_y_in_step_set = false;
        auto try_candidate = [&](const QPoint& cand) -> int {
            ++result.candidates_scanned;
            if (result.candidates_scanned > budget.max_candidates) return -1;
            if (!profile_ok(cand, next)) return 0;
            if (!Y(cand)) return 0;
            saw_y_in_step_set = true;
            if (!fresh_value(cand)) return 0;
            accept(cand);
            return 1;
        };

        int outcome = 0;
        if (pool) {
            for (const QPoint& p : *pool) {
                outcome = try_candidate(p);
                if (outcome != 0) break;
            }
        } else {
            // Structural scan of the ball: vary the coordinate at r and a
            // bounded window of coordinates below it.
            std::vector<Rational> coords{r};
            Rational cur = r;
            for (std::size_t i = 0; i < budget.depth_below; ++i) {
                auto deeper = S.pred(cur);
                if (!deeper) break;
                cur = *deeper;
                coords.push_back(cur);
            }
            std::vector<Nat> digits(coords.size(), 0);
            while (outcome == 0) {
                QPoint cand = b.center();
                for (std::size_t i = 0; i < coords.size(); ++i)
                    if (digits[i] != 0) cand = cand.with(coords[i], digits[i]);
                outcome = try_candidate(cand);
                if (outcome != 0) break;
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
        }
        if (outcome == 1) return true;
        if (outcome == -1) {
            result.status = EngineStatus::Unknown;
            return false;
        }
        // Scan exhausted: report the blocking ball with the covering family
        // (the radius-r^- balls around the minimizers), or the used values
        // when freshness was the obstruction.
        std::vector<Ball> covering;
        for (std::size_t m : minimizers) covering.emplace_back(result.built[m], excl_radius);
        BlockingCertificate cert{b, std::move(covering), {}, ""};
        if (saw_y_in_step_set && f) {
            cert.used_values = used_values;
            cert.reason = "step set meets Y but every probed point repeats an already used value";
        } else {
            cert.reason = "no point of Y in the step set within the probed region";
        }
        result.status = EngineStatus::Blocked;
        result.blocking = std::move(cert);
        return false;
    }

    EmbedResult run() {
        if (target.size() == 0) {
            result.status = EngineStatus::Success;
            return std::move(result);
        }
        if (!seed()) return std::move(result);
        for (std::size_t next = 1; next < target.size(); ++next)
            if (!step(next)) return std::move(result);

        if (!embedding_matches(result.built, target))
            throw Error("greedy_embed: internal error, output failed the distance re-check");
        for (const QPoint& p : result.built)
            if (!Y(p)) throw Error("greedy_embed: internal error, output left Y");
        if (f) {
            std::set<std::size_t> values;
            for (const QPoint& p : result.built)
                if (!values.insert((*f)(p)).second)
                    throw Error("injective_copy: internal error, output failed the injectivity re-check");
        }
        result.status = EngineStatus::Success;
        return std::move(result);
    }
};

} // namespace

EmbedResult greedy_embed(const PointPredicate& Y, const FiniteSpace& target, DistanceSet& S,
                         const EmbedBudget& budget, const std::optional<std::vector<QPoint>>& pool) {
    Engine e{Y, target, S, budget, pool};
    return e.run();
}

EmbedResult injective_copy(const std::function<std::size_t(const QPoint&)>& f, const PointPredicate& Y,
                           const FiniteSpace& target, DistanceSet& S, const EmbedBudget& budget,
                           const std::optional<std::vector<QPoint>>& pool) {
    Engine e{Y, target, S, budget, pool};
    e.f = &f;
    return e.run();
}

MonoResult monochromatic_copy(const OracleColoring& chi, const FiniteSpace& target, DistanceSet& S,
                              const Region& region, Nat smallness_width, const EmbedBudget& budget) {
    MonoResult out;
    std::vector<PruneResult> pruned;
    pruned.reserve(chi.arity());
    for (Nat c = 0; c < chi.arity(); ++c) {
        PointPredicate in_class = [&chi, c](const QPoint& p) { return chi(p) == c; };
        pruned.push_back(prune_sequence(in_class, S, region, smallness_width));
        out.residue_sizes.push_back(pruned.back().residue.size());
    }

    Nat best = 0;
    for (Nat c = 1; c < chi.arity(); ++c)
        if (out.residue_sizes[c] > out.residue_sizes[best]) best = c;
    if (out.residue_sizes[best] == 0)
        throw Error("monochromatic_copy: every color class pruned to empty over the region; "
                    "enlarge the region (depth/width) and retry");

    out.color = best;
    out.prune_stages = pruned[best].stages;
    PointPredicate in_class = [&chi, best](const QPoint& p) { return chi(p) == best; };
    EmbedResult embed = greedy_embed(in_class, target, S, budget, pruned[best].residue);

    out.status = embed.status;
    out.blocking = embed.blocking;
    if (embed.status != EngineStatus::Success) return out;

    // Postcondition re-check, independent of the engine's own checks.
    if (!embedding_matches(embed.built, target))
        throw Error("monochromatic_copy: internal error, copy failed the isometry re-check");
    for (const QPoint& p : embed.built)
        if (chi(p) != best) throw Error("monochromatic_copy: internal error, copy is not monochromatic");
    out.points = std::move(embed.built);
    return out;
}

} // namespace qspace

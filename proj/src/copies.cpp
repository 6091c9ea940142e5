#include "qspace/copies.hpp"

#include "qspace/error.hpp"

#include <algorithm>
#include <set>

namespace qspace {

std::vector<Copy> enumerate_copies(const FiniteSpace& Z, const FiniteSpace& X) {
    const std::size_t n = Z.size();
    const std::size_t m = X.size();
    std::vector<Copy> out;
    if (m == 0 || m > n) return out;

    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> image;
    std::vector<bool> used(n, false);
    image.reserve(m);

    std::function<void()> extend = [&] {
        if (image.size() == m) {
            std::vector<std::size_t> pts = image;
            std::sort(pts.begin(), pts.end());
            if (seen.insert(pts).second) out.push_back(Copy{std::move(pts), image});
            return;
        }
        std::size_t i = image.size();
        for (std::size_t z = 0; z < n; ++z) {
            if (used[z]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) ok = (Z.dist(image[j], z) == X.dist(j, i));
            if (!ok) continue;
            used[z] = true;
            image.push_back(z);
            extend();
            image.pop_back();
            used[z] = false;
        }
    };
    extend();
    std::sort(out.begin(), out.end(), [](const Copy& a, const Copy& b) { return a.points < b.points; });
    return out;
}

bool copy_is_isometric(const FiniteSpace& Z, const FiniteSpace& X, const Copy& c) {
    if (c.witness.size() != X.size()) return false;
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = 0; j < X.size(); ++j)
            if (Z.dist(c.witness[i], c.witness[j]) != X.dist(i, j)) return false;
    std::vector<std::size_t> pts = c.witness;
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) return false;
    return pts == c.points;
}

bool counterexample_is_valid(const FiniteSpace& Z, const FiniteSpace& Y, const FiniteSpace& X, Nat l,
                             const std::vector<Nat>& coloring) {
    auto x_copies = enumerate_copies(Z, X);
    if (coloring.size() != x_copies.size()) return false;
    for (const Copy& yc : enumerate_copies(Z, Y)) {
        std::set<Nat> values;
        for (std::size_t i = 0; i < x_copies.size(); ++i) {
            if (std::includes(yc.points.begin(), yc.points.end(), x_copies[i].points.begin(),
                              x_copies[i].points.end()))
                values.insert(coloring[i]);
        }
        if (values.size() <= l) return false; // this Y-copy is good for the coloring
    }
    return true;
}

namespace {

struct ArrowSearch {
    Nat k, l;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::size_t num_x = 0;
    // For each Y-copy: which X-copy indices it contains.
    std::vector<std::vector<std::size_t>> members;
    // Per Y-copy: how many of its X-copies are still uncolored, and the set of
    // colors seen so far (bitmask; k <= 32).
    std::vector<std::size_t> uncolored;
    std::vector<std::uint32_t> mask;
    // For each X-copy: the Y-copies containing it.
    std::vector<std::vector<std::size_t>> containing;
    std::vector<Nat> color;
    bool out_of_budget = false;

    static int popcount(std::uint32_t v) { return __builtin_popcount(v); }

    // True when a counterexample coloring extending the current partial one
    // was found (stored in `color`, remaining entries filled with 0).
    bool search(std::size_t idx, Nat max_used) {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        if (idx == num_x) return every_y_copy_bad();
        // Colors explored up to permutation: at most one fresh color per step.
        Nat limit = std::min<Nat>(k - 1, max_used + 1);
        for (Nat c = 0; c <= limit; ++c) {
            color[idx] = c;
            bool viable = true;
            for (std::size_t y : containing[idx]) {
                --uncolored[y];
                mask[y] |= (std::uint32_t(1) << c);
                // A fully colored Y-copy showing <= l values kills every
                // completion of this branch.
                if (uncolored[y] == 0 && popcount(mask[y]) <= static_cast<int>(l)) viable = false;
            }
            if (viable && search(idx + 1, std::max(max_used, c))) return true;
            for (std::size_t y : containing[idx]) {
                ++uncolored[y];
                recompute_mask(y, idx);
            }
            if (out_of_budget) return false;
        }
        return false;
    }

    bool every_y_copy_bad() const {
        for (std::size_t y = 0; y < members.size(); ++y)
            if (popcount(mask[y]) <= static_cast<int>(l)) return false;
        return true;
    }

    // Masks are not incrementally reversible (a color may be contributed by
    // several members), so recompute from scratch on undo.
    void recompute_mask(std::size_t y, std::size_t uncolored_from) {
        std::uint32_t m = 0;
        for (std::size_t x : members[y])
            if (x < uncolored_from) m |= (std::uint32_t(1) << color[x]);
        mask[y] = m;
    }
};

} // namespace

ArrowVerdict check_arrow(const FiniteSpace& Z, const FiniteSpace& Y, const FiniteSpace& X, Nat k, Nat l,
                         std::uint64_t budget) {
    if (k == 0 || l == 0) throw Error("check_arrow: k and l must be positive");
    if (k > 32) throw Error("check_arrow: at most 32 colors supported");

    auto x_copies = enumerate_copies(Z, X);
    auto y_copies = enumerate_copies(Z, Y);

    ArrowVerdict verdict;
    verdict.x_copies = x_copies.size();
    verdict.y_copies = y_copies.size();
    verdict.budget = budget;

    if (y_copies.empty()) {
        // No copy of Y at all: the relation fails for any total coloring.
        verdict.status = ArrowStatus::Fails;
        verdict.counterexample = std::vector<Nat>(x_copies.size(), 0);
        return verdict;
    }
    if (l >= k || x_copies.empty()) {
        // Pigeonhole (or nothing to color): every coloring is good on every copy.
        verdict.status = ArrowStatus::Holds;
        verdict.sample_good_copy = y_copies.front();
        return verdict;
    }

    ArrowSearch s;
    s.k = k;
    s.l = l;
    s.budget = budget;
    s.num_x = x_copies.size();
    s.members.resize(y_copies.size());
    s.containing.resize(x_copies.size());
    for (std::size_t y = 0; y < y_copies.size(); ++y)
        for (std::size_t x = 0; x < x_copies.size(); ++x)
            if (std::includes(y_copies[y].points.begin(), y_copies[y].points.end(), x_copies[x].points.begin(),
                              x_copies[x].points.end())) {
                s.members[y].push_back(x);
                s.containing[x].push_back(y);
            }
    s.uncolored.resize(y_copies.size());
    for (std::size_t y = 0; y < y_copies.size(); ++y) s.uncolored[y] = s.members[y].size();
    s.mask.assign(y_copies.size(), 0);
    s.color.assign(x_copies.size(), 0);

    // A Y-copy with no X-copies inside can never see more than l values, so a
    // counterexample is impossible.
    bool empty_y = false;
    for (std::size_t y = 0; y < y_copies.size(); ++y)
        if (s.members[y].empty()) empty_y = true;

    bool found = !empty_y && s.search(0, 0);
    verdict.nodes_explored = s.nodes;
    if (found) {
        verdict.status = ArrowStatus::Fails;
        verdict.counterexample = s.color;
        if (!counterexample_is_valid(Z, Y, X, l, s.color))
            throw Error("check_arrow: internal error, emitted counterexample failed re-validation");
        return verdict;
    }
    if (s.out_of_budget) {
        verdict.status = ArrowStatus::Unknown;
        return verdict;
    }
    verdict.status = ArrowStatus::Holds;
    // Demonstration witness: the good copy for the all-zero coloring.
    verdict.sample_good_copy = y_copies.front();
    return verdict;
}

} // namespace qspace

#pragma once

#include "qspace/space.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qspace {

/// A copy of a pattern space X inside an ambient space Z: the subset of Z's
/// point indices (sorted) plus one witnessing bijection, witness[i] = the
/// Z-point playing X's point i.
struct Copy {
    std::vector<std::size_t> points;
    std::vector<std::size_t> witness;
};

/// All subsets of Z isometric to X, deterministically ordered by point set.
/// Backtracking with distance-matrix pruning; each subset appears once even
/// when X has several self-isometries.
std::vector<Copy> enumerate_copies(const FiniteSpace& Z, const FiniteSpace& X);

/// True when the witness map of `c` really is an isometry X -> Z; used as the
/// independent re-check on every emitted copy.
bool copy_is_isometric(const FiniteSpace& Z, const FiniteSpace& X, const Copy& c);

enum class ArrowStatus { Holds, Fails, Unknown };

/// Verdict for Z -> (Y)^X_{k,l}. A Fails verdict carries a total
/// counterexample coloring of the copies of X in Z (index-aligned with
/// enumerate_copies(Z, X)), re-validated on emission: every copy of Y sees
/// more than l values under it. A Holds verdict carries search statistics and
/// a sample good Y-copy for the all-zero coloring. Unknown = budget exhausted.
struct ArrowVerdict {
    ArrowStatus status = ArrowStatus::Unknown;
    std::optional<std::vector<Nat>> counterexample;
    std::optional<Copy> sample_good_copy;
    std::size_t x_copies = 0;
    std::size_t y_copies = 0;
    std::uint64_t nodes_explored = 0;
    std::uint64_t budget = 0;
};

/// Decides whether every k-coloring of the copies of X in Z admits a copy of
/// Y whose X-copies carry at most l values. Backtracking over colorings up to
/// color permutation, pruning a branch as soon as some fully colored Y-copy
/// already sees at most l values. `budget` caps the number of assignments
/// explored; exhaustion yields Unknown, never a wrong verdict.
ArrowVerdict check_arrow(const FiniteSpace& Z, const FiniteSpace& Y, const FiniteSpace& X, Nat k, Nat l,
                         std::uint64_t budget = 50'000'000);

/// Re-checks a counterexample coloring by plain scanning; exposed so reports
/// can recompute verification instead of trusting the search.
bool counterexample_is_valid(const FiniteSpace& Z, const FiniteSpace& Y, const FiniteSpace& X, Nat l,
                             const std::vector<Nat>& coloring);

} // namespace qspace

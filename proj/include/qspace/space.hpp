#pragma once

#include "qspace/distance_set.hpp"
#include "qspace/qpoint.hpp"
#include "qspace/rational.hpp"

#include <string>
#include <vector>

namespace qspace {

/// One violated property of a candidate distance matrix.
struct SpaceViolation {
    enum class Kind {
        NotSquare,
        Asymmetric,
        NonzeroDiagonal,
        NonpositiveOffDiagonal,
        NotInDistanceSet,
        UltrametricTriple,
    };
    Kind kind;
    std::size_t i = 0, j = 0, k = 0;
    std::string message;
};

/// A finite labeled ultrametric space: labels plus an exact distance matrix.
/// Construction checks shape only; metric validity is checked by
/// validate_space so that invalid matrices can be diagnosed rather than
/// rejected blindly.
class FiniteSpace {
public:
    FiniteSpace(std::vector<std::string> labels, std::vector<std::vector<Rational>> matrix);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Rational& dist(std::size_t i, std::size_t j) const { return matrix_[i][j]; }
    const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }

    /// Induced subspace on the given point indices (kept in the given order).
    FiniteSpace subspace(const std::vector<std::size_t>& points) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Rational>> matrix_;
};

/// Lists every violated property (symmetry, zero diagonal, positivity,
/// membership in S, ultrametric triples). A non-square matrix is reported as
/// such and not examined further. Empty result = valid.
std::vector<SpaceViolation> validate_space(const std::vector<std::vector<Rational>>& m, DistanceSet& S);
std::vector<SpaceViolation> validate_space(const FiniteSpace& X, DistanceSet& S);

bool is_valid_space(const FiniteSpace& X, DistanceSet& S);

/// Requires validity; throws Error carrying the violation list otherwise.
void require_valid_space(const FiniteSpace& X, DistanceSet& S, const std::string& what);

/// n points, all pairwise distances s.
FiniteSpace equilateral_space(std::size_t n, const Rational& s);

/// The space of the depth x branching coordinate window of Q_S: points are
/// all maps supported on the top `depth` distances with values < branching,
/// with their q_distance matrix. branching^depth points.
FiniteSpace grid_space(DistanceSet& S, std::size_t depth, Nat branching);

/// Space induced by a list of points of Q_S (labels p0, p1, ...).
FiniteSpace space_of_points(const std::vector<QPoint>& points);

std::string describe(const std::vector<SpaceViolation>& violations);

} // namespace qspace

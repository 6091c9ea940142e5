#include "qspace/space.hpp"

#include "qspace/enumerate.hpp"
#include "qspace/error.hpp"

#include <algorithm>
#include <sstream>

namespace qspace {

FiniteSpace::FiniteSpace(std::vector<std::string> labels, std::vector<std::vector<Rational>> matrix)
    : labels_(std::move(labels)), matrix_(std::move(matrix)) {
    if (matrix_.size() != labels_.size()) throw Error("FiniteSpace: label/matrix size mismatch");
    for (const auto& row : matrix_)
        if (row.size() != matrix_.size()) throw Error("FiniteSpace: matrix is not square");
}

FiniteSpace FiniteSpace::subspace(const std::vector<std::size_t>& points) const {
    std::vector<std::string> labels;
    std::vector<std::vector<Rational>> m(points.size(), std::vector<Rational>(points.size()));
    labels.reserve(points.size());
    for (std::size_t a = 0; a < points.size(); ++a) {
        labels.push_back(labels_[points[a]]);
        for (std::size_t b = 0; b < points.size(); ++b) m[a][b] = matrix_[points[a]][points[b]];
    }
    return FiniteSpace(std::move(labels), std::move(m));
}

std::vector<SpaceViolation> validate_space(const std::vector<std::vector<Rational>>& m, DistanceSet& S) {
    std::vector<SpaceViolation> out;
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) {
            out.push_back({SpaceViolation::Kind::NotSquare, i, 0, 0,
                           "row " + std::to_string(i) + " has " + std::to_string(m[i].size()) +
                               " entries, expected " + std::to_string(n)});
            return out;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!m[i][i].is_zero())
            out.push_back({SpaceViolation::Kind::NonzeroDiagonal, i, i, 0,
                           "d(" + std::to_string(i) + "," + std::to_string(i) + ") = " + m[i][i].str()});
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m[i][j] != m[j][i])
                out.push_back({SpaceViolation::Kind::Asymmetric, i, j, 0,
                               "d(" + std::to_string(i) + "," + std::to_string(j) + ") = " + m[i][j].str() +
                                   " but d(" + std::to_string(j) + "," + std::to_string(i) + ") = " +
                                   m[j][i].str()});
            if (!m[i][j].is_positive()) {
                out.push_back({SpaceViolation::Kind::NonpositiveOffDiagonal, i, j, 0,
                               "d(" + std::to_string(i) + "," + std::to_string(j) + ") = " + m[i][j].str()});
            } else if (!S.contains(m[i][j])) {
                out.push_back({SpaceViolation::Kind::NotInDistanceSet, i, j, 0,
                               "d(" + std::to_string(i) + "," + std::to_string(j) + ") = " + m[i][j].str() +
                                   " is not in S"});
            }
        }
    }
    // Ultrametric: in every triple the two largest distances are equal.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Rational& a = m[i][j];
                const Rational& b = m[j][k];
                const Rational& c = m[i][k];
                bool ok = (a <= std::max(b, c)) && (b <= std::max(a, c)) && (c <= std::max(a, b));
                if (!ok)
                    out.push_back({SpaceViolation::Kind::UltrametricTriple, i, j, k,
                                   "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                       std::to_string(k) + "): distances " + a.str() + ", " + b.str() + ", " +
                                       c.str()});
            }
    return out;
}

std::vector<SpaceViolation> validate_space(const FiniteSpace& X, DistanceSet& S) {
    return validate_space(X.matrix(), S);
}

bool is_valid_space(const FiniteSpace& X, DistanceSet& S) {
    return validate_space(X, S).empty();
}

void require_valid_space(const FiniteSpace& X, DistanceSet& S, const std::string& what) {
    auto v = validate_space(X, S);
    if (!v.empty()) throw Error(what + ": invalid space: " + describe(v));
}

FiniteSpace equilateral_space(std::size_t n, const Rational& s) {
    std::vector<std::string> labels;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("p" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) m[i][j] = s;
    }
    return FiniteSpace(std::move(labels), std::move(m));
}

FiniteSpace grid_space(DistanceSet& S, std::size_t depth, Nat branching) {
    return space_of_points(enumerate_qpoints(S, depth, branching));
}

FiniteSpace space_of_points(const std::vector<QPoint>& points) {
    const std::size_t n = points.size();
    std::vector<std::string> labels;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("p" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) m[i][j] = q_distance(points[i], points[j]);
    }
    return FiniteSpace(std::move(labels), std::move(m));
}

std::string describe(const std::vector<SpaceViolation>& violations) {
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i].message;
    }
    return os.str();
}

} // namespace qspace

#pragma once

#include "qspace/copies.hpp"
#include "qspace/distance_set.hpp"
#include "qspace/qpoint.hpp"
#include "qspace/space.hpp"
#include "qspace/tree.hpp"

#include <json.hpp>

#include <string>

namespace qspace {

using Json = nlohmann::json;

/// Space file: {"S": ["2","1","1/2"], "labels": [...], "matrix": [["0","1"],["1","0"]]}
/// with rationals as "p/q" or integer strings. Labels default to p0, p1, ...
struct SpaceFile {
    DistanceSet S;
    FiniteSpace space;
};

SpaceFile parse_space_json(const Json& j);
SpaceFile load_space(const std::string& path);
Json space_to_json(const FiniteSpace& X, const DistanceSet& S);

/// QPoint format: {"support": {"1": 2, "1/4": 5}}.
QPoint parse_qpoint_json(const Json& j);
Json qpoint_to_json(const QPoint& p);

/// Distance-set spec: either a comma-separated list of rationals
/// ("1,1/2,1/4"), or a builtin generator name: "halving" (2^-i) or
/// "approach-one" (1 - 2^-(i+1)).
DistanceSet parse_distance_set_spec(const std::string& spec);
Json distance_set_to_json(const DistanceSet& S);

/// Tree file: nested arrays, e.g. [[],[]] is a root with two leaves.
RootedTree load_tree(const std::string& path);

Json copy_to_json(const FiniteSpace& Z, const Copy& c);

/// Reads a whole file; parse errors from callers carry the path.
std::string read_file(const std::string& path);

} // namespace qspace

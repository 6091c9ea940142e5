#include "qspace/io.hpp"

#include "qspace/error.hpp"

#include <fstream>
#include <sstream>

namespace qspace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

Json parse_json_text(const std::string& text, const std::string& where) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(where + ": " + e.what()); // nlohmann reports byte positions
    }
}

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw Error(where + ": expected a rational as \"p/q\" string or integer");
}

} // namespace

SpaceFile parse_space_json(const Json& j) {
    if (!j.is_object()) throw Error("space file: expected a JSON object");
    if (!j.contains("S") || !j["S"].is_array()) throw Error("space file: missing \"S\" array");
    std::vector<Rational> values;
    for (const auto& v : j["S"]) values.push_back(rational_from_json(v, "space file S"));
    DistanceSet S = DistanceSet::finite(std::move(values));

    if (!j.contains("matrix") || !j["matrix"].is_array()) throw Error("space file: missing \"matrix\" array");
    std::vector<std::vector<Rational>> matrix;
    for (const auto& row : j["matrix"]) {
        if (!row.is_array()) throw Error("space file: matrix rows must be arrays");
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(rational_from_json(v, "space file matrix"));
        matrix.push_back(std::move(r));
    }

    std::vector<std::string> labels;
    if (j.contains("labels")) {
        for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
        if (labels.size() != matrix.size()) throw Error("space file: labels/matrix size mismatch");
    } else {
        for (std::size_t i = 0; i < matrix.size(); ++i) labels.push_back("p" + std::to_string(i));
    }

    auto violations = validate_space(matrix, S);
    if (!violations.empty()) throw Error("space file: invalid space: " + describe(violations));
    return SpaceFile{std::move(S), FiniteSpace(std::move(labels), std::move(matrix))};
}

SpaceFile load_space(const std::string& path) {
    return parse_space_json(parse_json_text(read_file(path), path));
}

Json space_to_json(const FiniteSpace& X, const DistanceSet& S) {
    Json j;
    j["S"] = Json::array();
    for (const Rational& s : S.materialized()) j["S"].push_back(s.str());
    j["labels"] = X.labels();
    Json m = Json::array();
    for (std::size_t i = 0; i < X.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < X.size(); ++k) row.push_back(X.dist(i, k).str());
        m.push_back(std::move(row));
    }
    j["matrix"] = std::move(m);
    return j;
}

QPoint parse_qpoint_json(const Json& j) {
    if (!j.is_object() || !j.contains("support") || !j["support"].is_object())
        throw Error("qpoint: expected {\"support\": {\"coord\": value, ...}}");
    std::vector<QPoint::Entry> entries;
    for (const auto& [key, value] : j["support"].items()) {
        if (!value.is_number_unsigned() && !value.is_number_integer())
            throw Error("qpoint: support values must be naturals");
        long v = value.get<long>();
        if (v < 0) throw Error("qpoint: support values must be naturals");
        entries.emplace_back(Rational::parse(key), static_cast<Nat>(v));
    }
    return QPoint::from_pairs(std::move(entries));
}

Json qpoint_to_json(const QPoint& p) {
    Json support = Json::object();
    for (const auto& [coord, v] : p.support()) support[coord.str()] = v;
    return Json{{"support", std::move(support)}};
}

DistanceSet parse_distance_set_spec(const std::string& spec) {
    if (spec == "halving") return DistanceSet::halving();
    if (spec == "approach-one") return DistanceSet::approach_one();
    std::vector<Rational> values;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) values.push_back(Rational::parse(item));
    }
    if (values.empty()) throw Error("distance set spec: nothing parsed from '" + spec + "'");
    return DistanceSet::finite(std::move(values));
}

Json distance_set_to_json(const DistanceSet& S) {
    Json j = Json::array();
    for (const Rational& s : S.materialized()) j.push_back(s.str());
    return j;
}

RootedTree load_tree(const std::string& path) {
    std::string text = read_file(path);
    try {
        return parse_tree(text);
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

Json copy_to_json(const FiniteSpace& Z, const Copy& c) {
    Json points = Json::array();
    for (std::size_t p : c.points) points.push_back(Z.label(p));
    Json witness = Json::object();
    for (std::size_t i = 0; i < c.witness.size(); ++i)
        witness["x" + std::to_string(i)] = Z.label(c.witness[i]);
    return Json{{"points", std::move(points)}, {"witness", std::move(witness)}};
}

} // namespace qspace

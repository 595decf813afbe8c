#pragma once

#include "json.hpp"

#include "eqset/space.hpp"

namespace eqset {

using nlohmann::json;

// Space encoding: {"type":"lp","p":1.5,"d":6} or {"type":"sum","q":1,"summands":[...]};
// p = infinity is written as the string "inf".

inline json space_to_json(const SpaceSpec& spec) {
    if (spec.is_leaf()) {
        const auto& lf = spec.leaf();
        json j;
        j["type"] = "lp";
        if (is_infinite_exponent(lf.p))
            j["p"] = "inf";
        else
            j["p"] = lf.p;
        j["d"] = lf.d;
        return j;
    }
    const auto& sum = spec.as_sum();
    json j;
    j["type"] = "sum";
    j["q"] = sum.q;
    json parts = json::array();
    for (const auto& s : sum.summands) parts.push_back(space_to_json(s));
    j["summands"] = parts;
    return j;
}

inline double exponent_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return lp_infinity;
        throw std::invalid_argument("space: exponent string must be \"inf\"");
    }
    if (!j.is_number()) throw std::invalid_argument("space: exponent must be a number or \"inf\"");
    return j.get<double>();
}

inline SpaceSpec space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw std::invalid_argument("space: expected an object with a \"type\" key");
    const std::string type = j.at("type").get<std::string>();
    if (type == "lp")
        return SpaceSpec::lp(exponent_from_json(j.at("p")), j.at("d").get<int>());
    if (type == "sum") {
        std::vector<SpaceSpec> parts;
        for (const auto& s : j.at("summands")) parts.push_back(space_from_json(s));
        return SpaceSpec::sum(j.at("q").get<double>(), std::move(parts));
    }
    throw std::invalid_argument("space: unknown type \"" + type + "\"");
}

inline json points_to_json(const std::vector<Vector>& points) {
    json arr = json::array();
    for (const auto& p : points) arr.push_back(p);
    return arr;
}

/// Accepts either a bare array of coordinate arrays or any object with a
/// "points" key (so a construct document can be fed back in whole).
inline std::vector<Vector> points_from_json(const json& j) {
    const json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("points")) throw std::invalid_argument("points: object lacks a \"points\" key");
        arr = &j.at("points");
    }
    if (!arr->is_array()) throw std::invalid_argument("points: expected an array of arrays");
    std::vector<Vector> points;
    for (const auto& row : *arr) {
        if (!row.is_array()) throw std::invalid_argument("points: each point must be an array");
        points.push_back(row.get<Vector>());
    }
    return points;
}

} // namespace eqset

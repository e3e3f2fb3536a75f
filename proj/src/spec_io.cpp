#include "cyclarea/spec_io.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

#include "cyclarea/construction.hpp"
#include "cyclarea/errors.hpp"

namespace cyclarea {

namespace {

using nlohmann::json;

double require_finite_number(const json& j, const std::string& where) {
    if (!j.is_number())
        throw InvalidInputError("spec field '" + where + "' must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v))
        throw InvalidInputError("spec field '" + where + "' must be finite");
    return v;
}

std::vector<double> require_number_array(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw InvalidInputError("spec field '" + where + "' must be a non-empty array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const json& item : j)
        out.push_back(require_finite_number(item, where));
    return out;
}

void require_exact_keys(const json& j, const std::set<std::string>& allowed) {
    for (const auto& item : j.items())
        if (!allowed.count(item.key()))
            throw InvalidInputError("unexpected spec field '" + item.key() + "' for this kind");
    for (const std::string& key : allowed)
        if (!j.contains(key))
            throw InvalidInputError("missing spec field '" + key + "'");
}

} // namespace

std::string spec_kind_name(SpecKind kind) {
    switch (kind) {
    case SpecKind::CentralAngles: return "central_angles";
    case SpecKind::SideLengths: return "side_lengths";
    case SpecKind::Vertices: return "vertices";
    case SpecKind::Random: return "random";
    }
    throw InvalidInputError("unknown spec kind");
}

PolygonSpec parse_polygon_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw InvalidInputError(std::string("spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw InvalidInputError("spec must be a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw InvalidInputError("spec needs a string field 'kind'");
    const std::string kind = j["kind"].get<std::string>();

    PolygonSpec spec;
    if (kind == "central_angles") {
        spec.kind = SpecKind::CentralAngles;
        require_exact_keys(j, {"kind", "radius", "gaps"});
        spec.radius = require_finite_number(j["radius"], "radius");
        spec.gaps = require_number_array(j["gaps"], "gaps");
    } else if (kind == "side_lengths") {
        spec.kind = SpecKind::SideLengths;
        require_exact_keys(j, {"kind", "sides"});
        spec.sides = require_number_array(j["sides"], "sides");
    } else if (kind == "vertices") {
        spec.kind = SpecKind::Vertices;
        require_exact_keys(j, {"kind", "points"});
        const json& pts = j["points"];
        if (!pts.is_array() || pts.empty())
            throw InvalidInputError("spec field 'points' must be a non-empty array of [x, y] pairs");
        for (const json& item : pts) {
            if (!item.is_array() || item.size() != 2)
                throw InvalidInputError("each point must be an [x, y] pair");
            spec.points.push_back({require_finite_number(item[0], "points"),
                                   require_finite_number(item[1], "points")});
        }
    } else if (kind == "random") {
        spec.kind = SpecKind::Random;
        require_exact_keys(j, {"kind", "seed", "vertex_count", "radius"});
        const json& seed = j["seed"];
        if (!seed.is_number_integer() || seed.get<std::int64_t>() < 0)
            throw InvalidInputError("spec field 'seed' must be a non-negative integer");
        spec.seed = seed.get<std::uint64_t>();
        const json& vc = j["vertex_count"];
        if (!vc.is_number_integer())
            throw InvalidInputError("spec field 'vertex_count' must be an integer");
        spec.vertex_count = vc.get<int>();
        if (spec.vertex_count < 3)
            throw InvalidInputError("spec field 'vertex_count' must be at least 3");
        spec.radius = require_finite_number(j["radius"], "radius");
    } else {
        throw InvalidInputError("unknown spec kind '" + kind + "'");
    }
    return spec;
}

CyclicPolygon build_polygon(const PolygonSpec& spec) {
    switch (spec.kind) {
    case SpecKind::CentralAngles:
        return from_central_angles(spec.radius, spec.gaps);
    case SpecKind::SideLengths:
        return polygon_from_sides(spec.sides);
    case SpecKind::Vertices:
        return from_vertices(spec.points);
    case SpecKind::Random:
        return random_cyclic_polygon(spec.seed, spec.vertex_count, spec.radius);
    }
    throw InvalidInputError("unknown spec kind");
}

void write_spec(JsonWriter& writer, const PolygonSpec& spec) {
    writer.begin_object();
    writer.key("kind");
    writer.value(spec_kind_name(spec.kind));
    switch (spec.kind) {
    case SpecKind::CentralAngles:
        writer.key("radius");
        writer.value(spec.radius);
        writer.key("gaps");
        writer.begin_array();
        for (double g : spec.gaps)
            writer.value(g);
        writer.end_array();
        break;
    case SpecKind::SideLengths:
        writer.key("sides");
        writer.begin_array();
        for (double s : spec.sides)
            writer.value(s);
        writer.end_array();
        break;
    case SpecKind::Vertices:
        writer.key("points");
        writer.begin_array();
        for (const Point2& p : spec.points) {
            writer.begin_array();
            writer.value(p.x);
            writer.value(p.y);
            writer.end_array();
        }
        writer.end_array();
        break;
    case SpecKind::Random:
        writer.key("seed");
        writer.value(spec.seed);
        writer.key("vertex_count");
        writer.value(spec.vertex_count);
        writer.key("radius");
        writer.value(spec.radius);
        break;
    }
    writer.end_object();
}

std::string spec_to_json(const PolygonSpec& spec) {
    JsonWriter writer;
    write_spec(writer, spec);
    return writer.str();
}

} // namespace cyclarea

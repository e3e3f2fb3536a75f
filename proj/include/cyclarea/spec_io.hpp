#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclarea/geometry.hpp"
#include "cyclarea/json_writer.hpp"

namespace cyclarea {

enum class SpecKind { CentralAngles, SideLengths, Vertices, Random };

/// Declarative polygon description, the JSON interchange format of the tools.
/// Exactly the fields belonging to the declared kind may be present:
///   central_angles: radius, gaps        side_lengths: sides
///   vertices:       points              random: seed, vertex_count, radius
struct PolygonSpec {
    SpecKind kind = SpecKind::CentralAngles;
    double radius = 0.0;
    std::vector<double> gaps;
    std::vector<double> sides;
    std::vector<Point2> points;
    std::uint64_t seed = 0;
    int vertex_count = 0;
};

std::string spec_kind_name(SpecKind kind);

/// Strict parse: unknown keys, missing keys, or mistyped values are rejected.
PolygonSpec parse_polygon_spec(const std::string& json_text);

CyclicPolygon build_polygon(const PolygonSpec& spec);

void write_spec(JsonWriter& writer, const PolygonSpec& spec);

std::string spec_to_json(const PolygonSpec& spec);

} // namespace cyclarea

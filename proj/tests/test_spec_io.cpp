#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "cyclarea/errors.hpp"
#include "cyclarea/geometry.hpp"
#include "cyclarea/json_writer.hpp"
#include "cyclarea/spec_io.hpp"
#include "support.hpp"

using namespace cyclarea;
using testsupport::rel_err;

TEST_CASE("format_double round trips and handles non-finite values") {
    for (double v : {0.1, 1.0 / 3.0, 6.2831853071795862, -0.0, 1e-300, 4.0}) {
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "null");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "null");
}

TEST_CASE("json_escape quotes control and special characters") {
    CHECK(json_escape("plain") == "plain");
    CHECK(json_escape("a\"b") == "a\\\"b");
    CHECK(json_escape("a\\b") == "a\\\\b");
    CHECK(json_escape("a\nb\tc") == "a\\nb\\tc");
    CHECK(json_escape(std::string("a\x01z")) == "a\\u0001z");
}

TEST_CASE("JsonWriter layout is deterministic") {
    JsonWriter w;
    w.begin_object();
    w.key("name");
    w.value("box");
    w.key("count");
    w.value(3);
    w.key("weights");
    w.begin_array();
    w.value(0.5);
    w.value(1.5);
    w.end_array();
    w.key("extra");
    w.null();
    w.end_object();

    const std::string expected = "{\n"
                                 "  \"name\": \"box\",\n"
                                 "  \"count\": 3,\n"
                                 "  \"weights\": [\n"
                                 "    0.5,\n"
                                 "    1.5\n"
                                 "  ],\n"
                                 "  \"extra\": null\n"
                                 "}\n";
    CHECK(w.str() == expected);

    // The output is valid JSON as far as a real parser is concerned.
    const auto parsed = nlohmann::json::parse(w.str());
    CHECK(parsed.is_object());
}

TEST_CASE("parse_polygon_spec accepts each kind") {
    const auto ca = parse_polygon_spec(
        R"({"kind": "central_angles", "radius": 2.0, "gaps": [1.5, 2.5, 2.2831853071795862]})");
    CHECK(ca.kind == SpecKind::CentralAngles);
    CHECK(ca.radius == 2.0);
    REQUIRE(ca.gaps.size() == 3);
    CHECK(build_polygon(ca).circle().radius == 2.0);

    const auto sl = parse_polygon_spec(R"({"kind": "side_lengths", "sides": [3, 4, 5]})");
    CHECK(sl.kind == SpecKind::SideLengths);
    CHECK(rel_err(shoelace_area(vertices(build_polygon(sl))), 6.0) < 1e-10);

    const auto vx = parse_polygon_spec(
        R"({"kind": "vertices", "points": [[1, 1], [-1, 1], [-1, -1], [1, -1]]})");
    CHECK(vx.kind == SpecKind::Vertices);
    REQUIRE(vx.points.size() == 4);
    CHECK(rel_err(shoelace_area(vertices(build_polygon(vx))), 4.0) < 1e-12);

    const auto rd =
        parse_polygon_spec(R"({"kind": "random", "seed": 7, "vertex_count": 5, "radius": 1.5})");
    CHECK(rd.kind == SpecKind::Random);
    CHECK(rd.seed == 7);
    CHECK(rd.vertex_count == 5);
    CHECK(build_polygon(rd).vertex_count() == 5);
}

TEST_CASE("parse_polygon_spec rejects malformed input") {
    CHECK_THROWS_AS(parse_polygon_spec("not json"), InvalidInputError);
    CHECK_THROWS_AS(parse_polygon_spec("[1, 2]"), InvalidInputError);
    CHECK_THROWS_AS(parse_polygon_spec(R"({"radius": 1})"), InvalidInputError);
    CHECK_THROWS_AS(parse_polygon_spec(R"({"kind": "pentagon"})"), InvalidInputError);

    // Missing, extra, and mistyped fields.
    CHECK_THROWS_AS(parse_polygon_spec(R"({"kind": "central_angles", "radius": 1})"),
                    InvalidInputError);
    CHECK_THROWS_AS(
        parse_polygon_spec(R"({"kind": "side_lengths", "sides": [3, 4, 5], "radius": 1})"),
        InvalidInputError);
    CHECK_THROWS_AS(parse_polygon_spec(R"({"kind": "side_lengths", "sides": "345"})"),
                    InvalidInputError);
    CHECK_THROWS_AS(parse_polygon_spec(R"({"kind": "side_lengths", "sides": []})"),
                    InvalidInputError);
    CHECK_THROWS_AS(parse_polygon_spec(R"({"kind": "side_lengths", "sides": [3, null, 5]})"),
                    InvalidInputError);
    CHECK_THROWS_AS(parse_polygon_spec(R"({"kind": "vertices", "points": [[1, 2], [3]]})"),
                    InvalidInputError);
    CHECK_THROWS_AS(
        parse_polygon_spec(R"({"kind": "random", "seed": -1, "vertex_count": 5, "radius": 1})"),
        InvalidInputError);
    CHECK_THROWS_AS(
        parse_polygon_spec(R"({"kind": "random", "seed": 0.5, "vertex_count": 5, "radius": 1})"),
        InvalidInputError);
    CHECK_THROWS_AS(
        parse_polygon_spec(R"({"kind": "random", "seed": 1, "vertex_count": 2, "radius": 1})"),
        InvalidInputError);
}

TEST_CASE("spec serialization round trips every kind") {
    PolygonSpec ca;
    ca.kind = SpecKind::CentralAngles;
    ca.radius = 1.25;
    ca.gaps = {1.0, 2.0, 2.0 * std::numbers::pi - 3.0};

    PolygonSpec sl;
    sl.kind = SpecKind::SideLengths;
    sl.sides = {3.0, 4.0, 5.0};

    PolygonSpec vx;
    vx.kind = SpecKind::Vertices;
    vx.points = {{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}};

    PolygonSpec rd;
    rd.kind = SpecKind::Random;
    rd.seed = 123456789012345ULL;
    rd.vertex_count = 7;
    rd.radius = 0.5;

    for (const PolygonSpec& spec : {ca, sl, vx, rd}) {
        const std::string text = spec_to_json(spec);
        const PolygonSpec back = parse_polygon_spec(text);
        CHECK(back.kind == spec.kind);
        CHECK(spec_to_json(back) == text);
    }

    const PolygonSpec back = parse_polygon_spec(spec_to_json(rd));
    CHECK(back.seed == rd.seed);
    CHECK(back.vertex_count == rd.vertex_count);
    CHECK(back.radius == rd.radius);
}

TEST_CASE("spec_kind_name covers every kind") {
    CHECK(spec_kind_name(SpecKind::CentralAngles) == "central_angles");
    CHECK(spec_kind_name(SpecKind::SideLengths) == "side_lengths");
    CHECK(spec_kind_name(SpecKind::Vertices) == "vertices");
    CHECK(spec_kind_name(SpecKind::Random) == "random");
}

TEST_CASE("build_polygon propagates construction failures") {
    PolygonSpec bad;
    bad.kind = SpecKind::SideLengths;
    bad.sides = {1.0, 1.0, 3.0};
    CHECK_THROWS_AS(build_polygon(bad), InvalidInputError);
}

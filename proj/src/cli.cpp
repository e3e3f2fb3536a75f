#include "cyclarea/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cyclarea/area.hpp"
#include "cyclarea/construction.hpp"
#include "cyclarea/errors.hpp"
#include "cyclarea/fan.hpp"
#include "cyclarea/json_writer.hpp"
#include "cyclarea/spec_io.hpp"

namespace cyclarea::cli {

namespace {

std::string load_spec_text(const CommandRequest& request) {
    if (request.inline_spec && request.input_path)
        throw InvalidInputError("give either an input file or an inline spec, not both");
    if (request.inline_spec)
        return *request.inline_spec;
    if (!request.input_path)
        throw InvalidInputError("this command needs an input spec");
    std::ifstream in(*request.input_path);
    if (!in)
        throw InvalidInputError("cannot read input file '" + *request.input_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PolygonSpec load_spec(const CommandRequest& request) {
    return parse_polygon_spec(load_spec_text(request));
}

std::string text_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

CommandResult run_area(const CommandRequest& request) {
    const CyclicPolygon poly = build_polygon(load_spec(request));
    const FanDecomposition fan = fan_decompose(poly, request.apex);
    const AreaResult result = cyclic_area(fan);

    std::vector<double> sweep;
    if (request.all_apices) {
        sweep.reserve(poly.vertex_count());
        for (int apex = 0; apex < static_cast<int>(poly.vertex_count()); ++apex)
            sweep.push_back(cyclic_area(fan_decompose(poly, apex)).area);
    }

    CommandResult out;
    if (request.format == OutputFormat::Json) {
        JsonWriter w;
        w.begin_object();
        w.key("n");
        w.value(fan.n());
        w.key("apex");
        w.value(request.apex);
        w.key("area");
        w.value(result.area);
        w.key("f1");
        w.value(result.factors.f1);
        w.key("f2");
        w.value(result.factors.f2);
        if (request.all_apices) {
            w.key("apex_sweep");
            w.begin_object();
            w.key("areas");
            w.begin_array();
            for (double a : sweep)
                w.value(a);
            w.end_array();
            const auto [lo, hi] = std::minmax_element(sweep.begin(), sweep.end());
            w.key("rel_spread");
            w.value(relative_error(*hi, *lo));
            w.end_object();
        }
        w.end_object();
        out.output = w.str();
    } else {
        std::ostringstream text;
        text << "n: " << fan.n() << "\n"
             << "apex: " << request.apex << "\n"
             << "area: " << text_num(result.area) << "\n"
             << "f1: " << text_num(result.factors.f1) << "\n"
             << "f2: " << text_num(result.factors.f2) << "\n";
        if (request.all_apices) {
            const auto [lo, hi] = std::minmax_element(sweep.begin(), sweep.end());
            text << "apex sweep rel spread: " << text_num(relative_error(*hi, *lo)) << "\n";
            for (std::size_t i = 0; i < sweep.size(); ++i)
                text << "  apex " << i << ": " << text_num(sweep[i]) << "\n";
        }
        out.output = text.str();
    }
    return out;
}

CommandResult run_decompose(const CommandRequest& request) {
    const CyclicPolygon poly = build_polygon(load_spec(request));
    const FanDecomposition fan = fan_decompose(poly, request.apex);

    CommandResult out;
    if (request.format == OutputFormat::Json) {
        JsonWriter w;
        w.begin_object();
        w.key("apex");
        w.value(fan.apex_index);
        w.key("n");
        w.value(fan.n());
        w.key("triangles");
        w.begin_array();
        for (const TriangleSplit& s : fan.splits) {
            w.begin_object();
            w.key("r");
            w.value(s.r);
            w.key("s");
            w.value(s.s);
            w.key("t");
            w.value(s.t);
            w.key("p");
            w.value(s.p);
            w.key("rho");
            w.value(s.rho);
            w.key("area");
            w.value(s.area);
            w.end_object();
        }
        w.end_array();
        w.key("diagonals");
        w.begin_array();
        for (int i = 1; i < fan.n(); ++i) {
            const TriangleSplit& s = fan.splits[static_cast<std::size_t>(i - 1)];
            w.value(s.s + s.t);
        }
        w.end_array();
        w.end_object();
        out.output = w.str();
    } else {
        std::ostringstream text;
        text << "apex: " << fan.apex_index << "\nn: " << fan.n() << "\n";
        for (int j = 1; j <= fan.n(); ++j) {
            const TriangleSplit& s = fan.splits[static_cast<std::size_t>(j - 1)];
            text << "T" << j << ": r=" << text_num(s.r) << " s=" << text_num(s.s)
                 << " t=" << text_num(s.t) << " p=" << text_num(s.p)
                 << " rho=" << text_num(s.rho) << " area=" << text_num(s.area) << "\n";
        }
        for (int i = 1; i < fan.n(); ++i) {
            const TriangleSplit& s = fan.splits[static_cast<std::size_t>(i - 1)];
            text << "L" << i << "," << i + 1 << ": " << text_num(s.s + s.t) << "\n";
        }
        out.output = text.str();
    }
    return out;
}

CommandResult run_verify(const CommandRequest& request) {
    const CyclicPolygon poly = build_polygon(load_spec(request));
    const VerificationReport report = verify_polygon(poly, request.tolerance_overrides);
    const double area = cyclic_area(fan_decompose(poly, 0)).area;

    CommandResult out;
    out.exit_code = report.pass ? 0 : 1;
    if (request.format == OutputFormat::Json) {
        JsonWriter w;
        w.begin_object();
        w.key("area");
        w.value(area);
        w.key("report");
        write_report(w, report);
        w.end_object();
        out.output = w.str();
    } else {
        out.output = "area: " + text_num(area) + "\n" + report_to_text(report);
    }
    return out;
}

CommandResult run_fuzz(const CommandRequest& request) {
    FuzzConfig config = request.fuzz;
    config.tolerance_overrides = request.tolerance_overrides;
    const VerificationReport report = fuzz(config);

    CommandResult out;
    out.exit_code = report.pass ? 0 : 1;
    out.output = request.format == OutputFormat::Json ? report_to_json(report)
                                                      : report_to_text(report);
    return out;
}

CommandResult run_solve_radius(const CommandRequest& request) {
    const PolygonSpec spec = load_spec(request);
    if (spec.kind != SpecKind::SideLengths)
        throw InvalidInputError("solve-radius needs a side_lengths spec");
    const RadiusSolution sol = circumradius_from_sides(spec.sides);

    CommandResult out;
    if (request.format == OutputFormat::Json) {
        JsonWriter w;
        w.begin_object();
        w.key("radius");
        w.value(sol.radius);
        w.key("center_inside");
        w.value(sol.center_inside);
        w.end_object();
        out.output = w.str();
    } else {
        out.output = "radius: " + text_num(sol.radius) + "\ncenter_inside: " +
                     (sol.center_inside ? "true" : "false") + "\n";
    }
    return out;
}

std::string error_document(OutputFormat format, const char* kind, const std::string& message) {
    if (format == OutputFormat::Json) {
        JsonWriter w;
        w.begin_object();
        w.key("error");
        w.begin_object();
        w.key("kind");
        w.value(std::string_view(kind));
        w.key("message");
        w.value(std::string_view(message));
        w.end_object();
        w.end_object();
        return w.str();
    }
    return std::string("error: ") + message + "\n";
}

} // namespace

int exit_code_for(const std::exception& error) {
    if (dynamic_cast<const NumericError*>(&error))
        return 2;
    return 1;
}

CommandResult run(const CommandRequest& request) {
    try {
        switch (request.command) {
        case Command::Area: return run_area(request);
        case Command::Decompose: return run_decompose(request);
        case Command::Verify: return run_verify(request);
        case Command::Fuzz: return run_fuzz(request);
        case Command::SolveRadius: return run_solve_radius(request);
        }
        throw InvalidInputError("unknown command");
    } catch (const NumericError& e) {
        return {2, "", error_document(request.format, "numeric", e.what())};
    } catch (const std::exception& e) {
        return {1, "", error_document(request.format, "invalid-input", e.what())};
    }
}

} // namespace cyclarea::cli

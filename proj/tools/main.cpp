#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclarea/cli.hpp"
#include "cyclarea/errors.hpp"

namespace {

using cyclarea::cli::Command;
using cyclarea::cli::CommandRequest;
using cyclarea::cli::OutputFormat;

struct Parsed {
    CommandRequest request;
    std::string format = "text";
    std::string input;
    std::string inline_spec;
    std::vector<std::string> tol_args;
    std::string vertex_counts = "3,4,5,6,7,8,9,10";
};

void add_io_options(CLI::App* cmd, Parsed& parsed, bool needs_input) {
    if (needs_input) {
        cmd->add_option("input", parsed.input, "path to a polygon spec JSON file");
        cmd->add_option("--spec", parsed.inline_spec, "inline polygon spec JSON");
    }
    cmd->add_option("--format", parsed.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

void parse_tolerances(const std::vector<std::string>& args, cyclarea::ToleranceOverrides& out) {
    for (const std::string& arg : args) {
        const std::size_t eq = arg.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size())
            throw cyclarea::InvalidInputError("tolerance override must look like name=value: '" + arg + "'");
        const std::string name = arg.substr(0, eq);
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(arg.substr(eq + 1), &used);
        } catch (const std::exception&) {
            throw cyclarea::InvalidInputError("bad tolerance value in '" + arg + "'");
        }
        if (used != arg.size() - eq - 1)
            throw cyclarea::InvalidInputError("bad tolerance value in '" + arg + "'");
        out[name] = value;
    }
}

std::vector<int> parse_vertex_counts(const std::string& text) {
    std::vector<int> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw cyclarea::InvalidInputError("bad vertex count '" + item + "'");
        }
    }
    if (out.empty())
        throw cyclarea::InvalidInputError("--vertex-counts must name at least one count");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"areas of convex cyclic polygons from incircle tangent splits"};
    app.require_subcommand(1);
    Parsed parsed;

    CLI::App* area = app.add_subcommand("area", "polygon area and its two factors");
    add_io_options(area, parsed, true);
    area->add_option("--apex", parsed.request.apex, "fan apex vertex")->capture_default_str();
    area->add_flag("--all-apices", parsed.request.all_apices, "sweep every apex and report the spread");

    CLI::App* decompose = app.add_subcommand("decompose", "per-triangle tangent splits of the fan");
    add_io_options(decompose, parsed, true);
    decompose->add_option("--apex", parsed.request.apex, "fan apex vertex")->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "run the identity suite on one polygon");
    add_io_options(verify, parsed, true);
    verify->add_option("--tol", parsed.tol_args, "tolerance override, name=value (repeatable)");

    CLI::App* fuzz = app.add_subcommand("fuzz", "run the identity suite over a seeded grid");
    add_io_options(fuzz, parsed, false);
    fuzz->add_option("--seed-start", parsed.request.fuzz.seed_start, "first seed")->capture_default_str();
    fuzz->add_option("--seed-count", parsed.request.fuzz.seed_count, "seeds per vertex count")
        ->capture_default_str();
    fuzz->add_option("--vertex-counts", parsed.vertex_counts, "comma-separated vertex counts")
        ->capture_default_str();
    fuzz->add_option("--radius", parsed.request.fuzz.radius, "circumradius for every trial")
        ->capture_default_str();
    fuzz->add_flag("--near-degenerate", parsed.request.fuzz.near_degenerate,
                   "pinch one gap toward the degeneracy floor");
    fuzz->add_option("--pinch-gap", parsed.request.fuzz.pinch_gap,
                     "pinched gap in radians (with --near-degenerate)")
        ->capture_default_str();
    fuzz->add_option("--tol", parsed.tol_args, "tolerance override, name=value (repeatable)");

    CLI::App* solve = app.add_subcommand("solve-radius", "circumradius from side lengths");
    add_io_options(solve, parsed, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    if (area->parsed())
        parsed.request.command = Command::Area;
    else if (decompose->parsed())
        parsed.request.command = Command::Decompose;
    else if (verify->parsed())
        parsed.request.command = Command::Verify;
    else if (fuzz->parsed())
        parsed.request.command = Command::Fuzz;
    else
        parsed.request.command = Command::SolveRadius;

    parsed.request.format = parsed.format == "json" ? OutputFormat::Json : OutputFormat::Text;
    if (!parsed.input.empty())
        parsed.request.input_path = parsed.input;
    if (!parsed.inline_spec.empty())
        parsed.request.inline_spec = parsed.inline_spec;
    if (parsed.request.command != Command::Fuzz && !parsed.request.input_path &&
        !parsed.request.inline_spec) {
        std::cerr << "error: an input spec file or --spec is required\n";
        return 64;
    }
    try {
        parse_tolerances(parsed.tol_args, parsed.request.tolerance_overrides);
        if (fuzz->parsed())
            parsed.request.fuzz.vertex_counts = parse_vertex_counts(parsed.vertex_counts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    }

    const cyclarea::cli::CommandResult result = cyclarea::cli::run(parsed.request);
    if (!result.output.empty())
        std::cout << result.output;
    if (!result.diagnostics.empty())
        std::cerr << result.diagnostics;
    return result.exit_code;
}

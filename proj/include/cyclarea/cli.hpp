#pragma once

#include <optional>
#include <string>

#include "cyclarea/verify.hpp"

namespace cyclarea::cli {

enum class Command { Area, Decompose, Verify, Fuzz, SolveRadius };
enum class OutputFormat { Text, Json };

/// One fully parsed invocation. Every command except fuzz needs an input
/// spec, either a file path or inline JSON text.
struct CommandRequest {
    Command command = Command::Area;
    std::optional<std::string> input_path;
    std::optional<std::string> inline_spec;
    OutputFormat format = OutputFormat::Text;
    int apex = 0;
    bool all_apices = false;
    ToleranceOverrides tolerance_overrides;
    FuzzConfig fuzz;
};

/// exit_code: 0 success (and verify/fuzz global pass), 1 infeasible or
/// invalid input (and verify/fuzz failure), 2 numeric non-convergence.
/// output goes to stdout, diagnostics to stderr.
struct CommandResult {
    int exit_code = 0;
    std::string output;
    std::string diagnostics;
};

CommandResult run(const CommandRequest& request);

/// Maps library errors onto the exit codes above.
int exit_code_for(const std::exception& error);

} // namespace cyclarea::cli

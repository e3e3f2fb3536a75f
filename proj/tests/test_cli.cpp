#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <doctest.h>
#include <json.hpp>

// Drives the installed binary end to end through a shell, the way a user
// would, and checks outputs and exit codes. The binary path arrives in the
// CYCLAREA_BIN environment variable.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

const std::string& binary_path() {
    static const std::string path = [] {
        const char* env = std::getenv("CYCLAREA_BIN");
        if (!env || !*env)
            throw std::runtime_error("CYCLAREA_BIN is not set");
        return std::string(env);
    }();
    return path;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string err_path =
        (std::filesystem::temp_directory_path() /
         ("cyclarea_stderr_" + std::to_string(::getpid()) + "_" + std::to_string(counter++)))
            .string();
    const std::string cmd = "\"" + binary_path() + "\" " + args + " 2>\"" + err_path + "\"";

    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed for: " + cmd);
    RunResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        result.out.append(buf, got);
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    std::ifstream err_in(err_path);
    std::ostringstream err_text;
    err_text << err_in.rdbuf();
    result.err = err_text.str();
    std::error_code ec;
    std::filesystem::remove(err_path, ec);
    return result;
}

std::string quoted(const std::string& text) {
    return "'" + text + "'";
}

std::string write_temp_spec(const std::string& name, const std::string& content) {
    const std::string path =
        (std::filesystem::temp_directory_path() /
         ("cyclarea_spec_" + std::to_string(::getpid()) + "_" + name + ".json"))
            .string();
    std::ofstream out(path);
    out << content;
    return path;
}

const char* kTriangleSpec = R"({"kind": "side_lengths", "sides": [3, 4, 5]})";
const char* kSquareSpec =
    R"({"kind": "central_angles", "radius": 1.4142135623730951,
        "gaps": [1.5707963267948966, 1.5707963267948966, 1.5707963267948966, 1.5707963267948966]})";
const char* kHexagonSpec = R"({"kind": "side_lengths", "sides": [1, 1, 1, 1, 1, 1]})";

} // namespace

TEST_CASE("area command, text output") {
    const auto r = run_cli("area --spec " + quoted(kTriangleSpec));
    CHECK(r.exit_code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("n: 1\n") != std::string::npos);
    CHECK(r.out.find("area: 6\n") != std::string::npos);
    CHECK(r.out.find("f1: 6\n") != std::string::npos);
    CHECK(r.out.find("f2: 6\n") != std::string::npos);
}

TEST_CASE("area command, JSON output from a spec file") {
    const std::string path = write_temp_spec("square", kSquareSpec);
    const auto r = run_cli("area --format json " + quoted(path));
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 2);
    CHECK(j["apex"] == 0);
    CHECK(std::abs(j["area"].get<double>() - 4.0) < 1e-12);
    CHECK(std::abs(j["f1"].get<double>() - 4.0) < 1e-12);
    CHECK(std::abs(j["f2"].get<double>() - 4.0) < 1e-12);

    // Same invocation, same bytes.
    const auto again = run_cli("area --format json " + quoted(path));
    CHECK(again.out == r.out);
    std::error_code ec;
    std::filesystem::remove(path, ec);
}

TEST_CASE("area command sweeps apices on request") {
    const std::string spec = R"({"kind": "random", "seed": 12, "vertex_count": 5, "radius": 1})";
    const auto r = run_cli("area --all-apices --format json --spec " + quoted(spec));
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("apex_sweep"));
    CHECK(j["apex_sweep"]["areas"].size() == 5);
    CHECK(j["apex_sweep"]["rel_spread"].get<double>() < 1e-8);

    const auto shifted = run_cli("area --apex 2 --format json --spec " + quoted(spec));
    const auto js = nlohmann::json::parse(shifted.out);
    CHECK(js["apex"] == 2);
    CHECK(std::abs(js["area"].get<double>() - j["area"].get<double>()) < 1e-8);
}

TEST_CASE("decompose command") {
    const auto r = run_cli("decompose --format json --spec " + quoted(kSquareSpec));
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["triangles"].size() == 2);
    const double rt2 = std::sqrt(2.0);
    CHECK(std::abs(j["triangles"][0]["r"].get<double>() - (2.0 - rt2)) < 1e-12);
    CHECK(std::abs(j["triangles"][0]["s"].get<double>() - rt2) < 1e-12);
    CHECK(std::abs(j["triangles"][1]["t"].get<double>() - (2.0 - rt2)) < 1e-12);
    REQUIRE(j["diagonals"].size() == 1);
    CHECK(std::abs(j["diagonals"][0].get<double>() - 2.0 * rt2) < 1e-12);

    const auto text = run_cli("decompose --spec " + quoted(kSquareSpec));
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("T1:") != std::string::npos);
    CHECK(text.out.find("T2:") != std::string::npos);
    CHECK(text.out.find("L1,2:") != std::string::npos);
}

TEST_CASE("solve-radius command") {
    const auto r = run_cli("solve-radius --spec " + quoted(kTriangleSpec));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "radius: 2.5\ncenter_inside: true\n");

    const auto obtuse =
        run_cli("solve-radius --format json --spec " +
                quoted(R"({"kind": "side_lengths", "sides": [2, 2, 3.9]})"));
    CHECK(obtuse.exit_code == 0);
    const auto j = nlohmann::json::parse(obtuse.out);
    CHECK(j["center_inside"] == false);
    CHECK(j["radius"].get<double>() > 1.95);

    // Wrong spec kind for this command.
    const auto wrong = run_cli("solve-radius --spec " + quoted(kSquareSpec));
    CHECK(wrong.exit_code == 1);
    CHECK(wrong.err.find("side_lengths") != std::string::npos);
}

TEST_CASE("verify command") {
    const auto r = run_cli("verify --format json --spec " + quoted(kHexagonSpec));
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["report"]["pass"] == true);
    CHECK(j["report"]["identities"].size() == 14);
    CHECK(std::abs(j["area"].get<double>() - 1.5 * std::sqrt(3.0)) < 1e-9);

    const auto text = run_cli("verify --spec " + quoted(kHexagonSpec));
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("verification: PASS") != std::string::npos);

    const auto unknown =
        run_cli("verify --tol no_such_identity=1e-9 --spec " + quoted(kHexagonSpec));
    CHECK(unknown.exit_code == 1);
    CHECK(unknown.err.find("unknown identity") != std::string::npos);
}

TEST_CASE("fuzz command") {
    const std::string args = "fuzz --seed-count 3 --vertex-counts 3,4 --format json";
    const auto r = run_cli(args);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["config"]["seed_count"] == 3);
    CHECK(j["config"]["vertex_counts"] == nlohmann::json::array({3, 4}));
    CHECK(j["identities"]["oracle_equivalence"]["trials"] == 6);

    const auto again = run_cli(args);
    CHECK(again.out == r.out);

    // An impossible tolerance turns the same run into a failure exit.
    const auto failing = run_cli("fuzz --seed-count 5 --vertex-counts 5,6 "
                                 "--tol oracle_equivalence=1e-30 --format json");
    CHECK(failing.exit_code == 1);
    const auto jf = nlohmann::json::parse(failing.out);
    CHECK(jf["pass"] == false);
    CHECK(jf["identities"]["oracle_equivalence"]["pass"] == false);
    CHECK(jf["identities"]["oracle_equivalence"]["worst_spec"]["kind"] == "random");
}

TEST_CASE("usage errors exit with 64") {
    CHECK(run_cli("").exit_code == 64);
    CHECK(run_cli("no-such-command").exit_code == 64);
    CHECK(run_cli("area").exit_code == 64);
    CHECK(run_cli("area --format yaml --spec " + quoted(kTriangleSpec)).exit_code == 64);
    CHECK(run_cli("verify --tol nonsense --spec " + quoted(kHexagonSpec)).exit_code == 64);
    CHECK(run_cli("fuzz --vertex-counts abc --seed-count 1").exit_code == 64);

    const auto missing = run_cli("area");
    CHECK(missing.err.find("input spec") != std::string::npos);
}

TEST_CASE("invalid input exits with 1 and an error document") {
    const auto infeasible = run_cli("solve-radius --format json --spec " +
                                    quoted(R"({"kind": "side_lengths", "sides": [1, 1, 3]})"));
    CHECK(infeasible.exit_code == 1);
    CHECK(infeasible.out.empty());
    const auto j = nlohmann::json::parse(infeasible.err);
    CHECK(j["error"]["kind"] == "invalid-input");
    CHECK(j["error"]["message"].get<std::string>().find("infeasible") != std::string::npos);

    const auto text_err = run_cli("area --spec " +
                                  quoted(R"({"kind": "side_lengths", "sides": [1, 1, 3]})"));
    CHECK(text_err.exit_code == 1);
    CHECK(text_err.err.rfind("error: ", 0) == 0);

    CHECK(run_cli("area /no/such/file.json").exit_code == 1);

    const std::string path = write_temp_spec("both", kTriangleSpec);
    const auto both = run_cli("area " + quoted(path) + " --spec " + quoted(kTriangleSpec));
    CHECK(both.exit_code == 1);
    CHECK(both.err.find("not both") != std::string::npos);
    std::error_code ec;
    std::filesystem::remove(path, ec);
}

TEST_CASE("help is a successful exit") {
    const auto r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("area") != std::string::npos);
    CHECK(r.out.find("solve-radius") != std::string::npos);
}

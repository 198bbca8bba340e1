#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "support.hpp"

using nlohmann::json;
using testsupport::run_command;

namespace {

const std::string cli = SOLTI_CLI_PATH;
const std::string data_dir = SOLTI_DATA_DIR;

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / "solti_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_scratch(const std::string& name, const std::string& content) {
    auto path = scratch_dir() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

}  // namespace

TEST_CASE("analyze reports the worked controllability result") {
    auto result = run_command(cli + " --format json analyze " + data_dir + "/example51.json");
    REQUIRE(result.exit_code == 0);
    json report = json::parse(result.output);
    const auto& ctrl = report["results"]["controllability"];
    CHECK(ctrl["computed_rank"] == 3);
    CHECK(ctrl["required_rank"] == 3);
    CHECK(ctrl["verdict"] == true);
    CHECK(std::abs(ctrl["determinant"].get<double>() + 291.0) < 1e-9);
}

TEST_CASE("analyze --assert exits 0 on an observable system") {
    auto result =
        run_command(cli + " analyze " + data_dir + "/example21.json --assert");
    CHECK(result.exit_code == 0);
}

TEST_CASE("analyze --assert exits 1 on an unobservable system") {
    std::string path = write_scratch("blind.json", R"({
        "kind":"discrete","n":1,"r":0,"p":1,
        "a0":[[1]],"a1":[[0]],"b":[[]],"c":[[0]]})");
    auto result = run_command(cli + " analyze " + path + " --assert");
    CHECK(result.exit_code == 1);
}

TEST_CASE("malformed input exits 2") {
    std::string path = write_scratch("broken.json", "{ this is not json");
    CHECK(run_command(cli + " analyze " + path).exit_code == 2);
    CHECK(run_command(cli + " tf " + path).exit_code == 2);
    CHECK(run_command(cli + " analyze " + scratch_dir().string() + "/missing.json").exit_code == 2);
    CHECK(run_command(cli + " bogus-subcommand").exit_code == 2);
}

TEST_CASE("tf reports the worked transfer function") {
    auto result = run_command(cli + " --format json tf " + data_dir + "/example52.json");
    REQUIRE(result.exit_code == 0);
    json report = json::parse(result.output);
    const auto& results = report["results"];
    CHECK(results["path"] == "second_order_resolvent");
    CHECK(results["rendered"][0][0] == "(7s^2 - 5)/(s^4 - 6s^2 + 5)");
    CHECK(results["cancellations"].empty());
    CHECK(results["poles"].size() == 4);
    CHECK(results["zeros"].size() == 2);
}

TEST_CASE("tf without an input channel exits 2") {
    CHECK(run_command(cli + " tf " + data_dir + "/example21.json").exit_code == 2);
}

TEST_CASE("simulate/reconstruct round trip through CSV files") {
    auto states = (scratch_dir() / "states.csv").string();
    auto outputs = (scratch_dir() / "outputs.csv").string();
    auto result = run_command(cli + " --format json simulate " + data_dir +
                              "/example21.json --x0 1,0 --x1 0,1 --steps 3 --out " + states +
                              " --outputs-out " + outputs);
    REQUIRE(result.exit_code == 0);

    auto rec = run_command(cli + " --format json reconstruct " + data_dir +
                           "/example21.json --outputs " + outputs);
    REQUIRE(rec.exit_code == 0);
    json report = json::parse(rec.output);
    CHECK(std::abs(report["results"]["x0"][0].get<double>() - 1.0) < 1e-9);
    CHECK(std::abs(report["results"]["x0"][1].get<double>() - 0.0) < 1e-9);
    CHECK(std::abs(report["results"]["x1"][1].get<double>() - 1.0) < 1e-9);
}

TEST_CASE("reconstruct on an unobservable system exits 3") {
    std::string sys_path = write_scratch("blind2.json", R"({
        "kind":"discrete","n":2,"r":0,"p":1,
        "a0":[[1,0],[1,-1]],"a1":[[0,1],[1,2]],"b":[[],[]],"c":[[0,0]]})");
    std::string outputs = write_scratch("zeros.csv", "0\n0\n0\n0\n");
    auto result = run_command(cli + " reconstruct " + sys_path + " --outputs " + outputs);
    CHECK(result.exit_code == 3);
}

TEST_CASE("steer reaches the requested target") {
    auto result = run_command(cli + " --format json steer " + data_dir +
                              "/example51_discrete.json --x0 1,0,2 --x1 0,1,0 --target 1,1,1");
    REQUIRE(result.exit_code == 0);
    json report = json::parse(result.output);
    CHECK(report["results"]["target_error"].get<double>() < 1e-6);
    CHECK(report["results"]["inputs"].size() == 3);
}

TEST_CASE("steer on an infeasible target exits 4") {
    std::string path = write_scratch("dead_input.json", R"({
        "kind":"discrete","n":2,"r":1,"p":1,
        "a0":[[1,0],[0,1]],"a1":[[0,0],[0,0]],"b":[[0],[0]],"c":[[1,0]]})");
    auto result = run_command(cli + " steer " + path + " --x0 0,0 --x1 0,0 --target 1,1");
    CHECK(result.exit_code == 4);
}

TEST_CASE("dual applied twice restores the original document") {
    auto once = (scratch_dir() / "dual_once.json").string();
    auto twice = (scratch_dir() / "dual_twice.json").string();
    REQUIRE(run_command(cli + " dual " + data_dir + "/example51.json --out " + once).exit_code == 0);
    REQUIRE(run_command(cli + " dual " + once + " --out " + twice).exit_code == 0);

    // Compare against the canonical rendering of the original.
    auto canon = run_command(cli + " dual " + twice);
    auto canon2 = run_command(cli + " dual " + twice);
    CHECK(canon.output == canon2.output);

    std::ifstream a(once), b(twice);
    std::string once_text((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string twice_text((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(once_text != twice_text);
    json original = json::parse(std::ifstream(data_dir + "/example51.json"));
    json restored = json::parse(twice_text);
    CHECK(original["a0"] == restored["a0"]);
    CHECK(original["a1"] == restored["a1"]);
    CHECK(original["b"] == restored["b"]);
    CHECK(original["c"] == restored["c"]);
}

TEST_CASE("reports are deterministic and format-consistent") {
    const std::string cmd = cli + " --format json analyze " + data_dir + "/example52.json";
    auto first = run_command(cmd);
    auto second = run_command(cmd);
    CHECK(first.output == second.output);

    auto text = run_command(cli + " analyze " + data_dir + "/example52.json");
    REQUIRE(text.exit_code == 0);
    json report = json::parse(first.output);

    // Every scalar leaf of the JSON report appears verbatim in the text report.
    std::function<void(const json&, const std::string&)> walk =
        [&](const json& node, const std::string& path) {
            if (node.is_object()) {
                for (const auto& [key, value] : node.items())
                    walk(value, path.empty() ? key : path + "." + key);
            } else if (!node.is_array()) {
                std::string line = path + " = " + node.dump();
                CHECK(text.output.find(line) != std::string::npos);
            }
        };
    walk(report, "");
}

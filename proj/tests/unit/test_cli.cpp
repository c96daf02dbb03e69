#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cli_app.hpp"
#include "doctest.h"

using namespace specsing::cli;

namespace {

RunConfig limit_config() {
    RunConfig c;
    c.command = "kernel-limit";
    c.beta = 2;
    c.grid_x = {0.5, 2.0};
    c.grid_y = {0.9, 2.0};
    return c;
}

std::string write_temp(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path.string();
}

}  // namespace

TEST_CASE("empty grid is a validation error") {
    RunConfig c;
    c.command = "kernel-eval";
    c.N_list = {10};
    CHECK(execute(c).exit_code == kValidation);
    c.command = "density-eval";
    CHECK(execute(c).exit_code == kValidation);
}

TEST_CASE("unknown command and bad parameters") {
    RunConfig c = limit_config();
    c.command = "nope";
    CHECK(execute(c).exit_code == kValidation);
    c = limit_config();
    c.beta = 3;
    CHECK(execute(c).exit_code == kValidation);
    c = limit_config();
    c.format = "xml";
    CHECK(execute(c).exit_code == kValidation);
}

TEST_CASE("non-convergence maps to exit code 2") {
    RunConfig c;
    c.command = "density-eval";
    c.beta = 4;
    c.N_list = {3};
    c.grid_x = {1.0};
    c.path = "integral";
    CHECK(execute(c).exit_code == kNumerical);
}

TEST_CASE("identical config gives identical bytes regardless of threads") {
    RunConfig c = limit_config();
    c.threads = 1;
    const std::string a = emit(execute(c).report, "json");
    c.threads = 4;
    const std::string b = emit(execute(c).report, "json");
    CHECK(a == b);
    CHECK(emit(execute(c).report, "csv") == emit(execute(c).report, "csv"));
}

TEST_CASE("csv header contract") {
    RunConfig c = limit_config();
    const std::string csv = emit(execute(c).report, "csv");
    CHECK(csv.substr(0, csv.find('\n')) == "beta,p,q,X,Y,K_re,K_im,L1_re,L1_im,L2_re,L2_im");

    c = RunConfig{};
    c.command = "kernel-eval";
    c.N_list = {20};
    c.grid_x = {1.0};
    c.grid_y = {0.5};
    const std::string e = emit(execute(c).report, "csv");
    CHECK(e.substr(0, e.find('\n')) == "beta,N,p,q,X,Y,S_scaled");
}

TEST_CASE("json round-trips through the loader") {
    RunConfig c;
    c.command = "morris-check";
    const RunResult res = execute(c);
    REQUIRE(res.exit_code == kOk);
    const std::string text = emit(res.report, "json");
    const Report back = load_report_json(text);
    CHECK(back.command == "morris-check");
    CHECK(back.columns == res.report.columns);
    REQUIRE(back.rows.size() == res.report.rows.size());
    for (std::size_t i = 0; i < back.rows.size(); ++i) CHECK(back.rows[i] == res.report.rows[i]);
    CHECK(emit(back, "json") == text);
}

TEST_CASE("17 significant digits") {
    Report r;
    r.command = "x";
    r.columns = {"v"};
    r.rows = {{0.1}, {1.0 / 3.0}};
    CHECK(emit(r, "csv") == "v\n0.10000000000000001\n0.33333333333333331\n");
    r.rows = {{std::nan("")}};
    CHECK(emit(r, "json").find("[null]") != std::string::npos);
}

TEST_CASE("config loader") {
    const std::string ok = write_temp("specsing_cfg_ok.json",
                                      R"({"command": "kernel-limit", "beta": 4, "grid_x": [1.0], "grid_y": [2.0],
                                          "tolerances": {"jker": 1e-9}})");
    const RunConfig c = load_config(ok);
    CHECK(c.command == "kernel-limit");
    CHECK(c.beta == 4);
    CHECK(c.tolerances.at("jker") == 1e-9);
    CHECK(execute(c).exit_code == kOk);

    const std::string bad = write_temp("specsing_cfg_bad.json", R"({"command": "kernel-limit", "gridx": [1]})");
    CHECK_THROWS(load_config(bad));
    std::filesystem::remove(ok);
    std::filesystem::remove(bad);
}

TEST_CASE("verification commands pass at their defaults") {
    for (const char* cmd : {"verify-identity", "ortho-check"}) {
        RunConfig c;
        c.command = cmd;
        CHECK(execute(c).exit_code == kOk);
    }
}

TEST_CASE("a tolerance that cannot be met gives exit code 3") {
    RunConfig c;
    c.command = "morris-check";
    c.tolerances["morris"] = 0.0;
    const RunResult r = execute(c);
    // a zero tolerance only passes if every case agrees bit for bit
    if (std::get<double>(r.report.summary.front().second) > 0.0) CHECK(r.exit_code == kVerification);
}

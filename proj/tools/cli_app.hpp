#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace specsing::cli {

enum ExitCode { kOk = 0, kValidation = 1, kNumerical = 2, kVerification = 3 };

struct RunConfig {
    std::string command;
    std::optional<int> beta;
    std::optional<double> p;
    std::optional<double> q;
    std::vector<int> N_list;
    std::vector<double> grid_x;  // X values, or θ for the density commands
    std::vector<double> grid_y;
    std::string output_path;     // empty: stdout
    std::string format = "csv";  // csv | json
    std::string path = "jack";   // density path: jack | integral
    std::map<std::string, double> tolerances;
    int threads = 0;
};

const std::vector<std::string>& command_names();

// Reads a JSON config; unknown keys are rejected.
RunConfig load_config(const std::string& file);

using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Report {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, Cell>> summary;
    bool verification_failed = false;
};

std::string emit(const Report& r, const std::string& format);
Report load_report_json(const std::string& text);

struct RunResult {
    int exit_code = kOk;
    Report report;
    std::string error;
};

// Validates, computes and returns the report; does not write files.
RunResult execute(const RunConfig& cfg);

// execute + write the report (file or stdout), errors to stderr.
int run(const RunConfig& cfg);

}  // namespace specsing::cli

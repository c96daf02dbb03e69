#include <iostream>

#include "CLI11.hpp"
#include "cli_app.hpp"
#include "specsing/errors.hpp"

int main(int argc, char** argv) {
    using namespace specsing::cli;
    CLI::App app{"Finite-N and limiting kernels, densities and expansion checks for Cauchy/circular Jacobi ensembles"};

    std::string config_path, command, out, format, path;
    int beta = 0, threads = 0;
    double p = 0.0, q = 0.0;
    std::vector<int> n_list;
    std::vector<double> grid_x, grid_y;
    std::vector<std::string> tols;

    app.add_option("--config", config_path, "JSON run configuration");
    auto* o_cmd = app.add_option("command,--command", command, "command name")
                      ->check(CLI::IsMember(command_names()));
    auto* o_beta = app.add_option("--beta", beta, "Dyson index (1, 2, 4 or even for densities)");
    auto* o_n = app.add_option("--n-list", n_list, "N values, comma separated")->delimiter(',');
    auto* o_p = app.add_option("--p", p, "exponent p");
    auto* o_q = app.add_option("--q", q, "q (kernels) or q tilde (densities)");
    auto* o_x = app.add_option("--grid-x", grid_x, "X values (theta for density commands)")->delimiter(',');
    auto* o_y = app.add_option("--grid-y", grid_y, "Y values")->delimiter(',');
    auto* o_out = app.add_option("--out", out, "output file (default stdout)");
    auto* o_fmt = app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    auto* o_path = app.add_option("--path", path, "density path: jack or integral")
                       ->check(CLI::IsMember({"jack", "integral"}));
    auto* o_thr = app.add_option("--threads", threads, "worker threads (falls back to SPECSING_THREADS)");
    app.add_option("--tol", tols, "tolerance override key=value, repeatable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kValidation;
    }

    RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = load_config(config_path);
        if (*o_cmd) cfg.command = command;
        if (*o_beta) cfg.beta = beta;
        if (*o_n) cfg.N_list = n_list;
        if (*o_p) cfg.p = p;
        if (*o_q) cfg.q = q;
        if (*o_x) cfg.grid_x = grid_x;
        if (*o_y) cfg.grid_y = grid_y;
        if (*o_out) cfg.output_path = out;
        if (*o_fmt) cfg.format = format;
        if (*o_path) cfg.path = path;
        if (*o_thr) cfg.threads = threads;
        for (const std::string& t : tols) {
            const auto eq = t.find('=');
            if (eq == std::string::npos) throw specsing::ValidationError("--tol expects key=value");
            cfg.tolerances[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
        }
        if (cfg.command.empty()) throw specsing::ValidationError("no command given");
    } catch (const specsing::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::logic_error&) {
        std::cerr << "error: bad --tol value\n";
        return kValidation;
    }
    return run(cfg);
}

// Command-line front end: evaluates superzeta functions, regularized
// determinants, residues, the Selberg formula layer, and the built-in
// verification suites from JSON job configs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "superzeta/cli_run.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::string format;
    double target_rel_error = 0.0;
    int threads = 0;
    std::string suite;
};

int execute(const std::string& command, const CommonOpts& opts) {
    using namespace superzeta;
    json config;
    if (!opts.config_path.empty()) {
        try {
            config = io::load_file(opts.config_path);
        } catch (const std::exception& e) {
            std::fprintf(stderr, "error code=1 message=\"%s\"\n", e.what());
            return 1;
        }
    }
    config["command"] = command;
    cli::Overrides ov;
    if (!opts.out_path.empty()) ov.out_path = opts.out_path;
    if (!opts.format.empty()) ov.format = opts.format;
    if (opts.target_rel_error > 0.0) ov.target_rel_error = opts.target_rel_error;
    if (opts.threads > 0) ov.threads = opts.threads;
    if (!opts.suite.empty()) ov.suite = opts.suite;

    cli::RunOutcome outcome = cli::run_job(config, ov);
    if (!outcome.diagnostic.empty()) std::fprintf(stderr, "%s\n", outcome.diagnostic.c_str());
    if (!outcome.output.empty()) {
        if (outcome.out_path.empty()) {
            std::fputs(outcome.output.c_str(), stdout);
        } else {
            std::ofstream out(outcome.out_path, std::ios::binary);
            if (!out) {
                std::fprintf(stderr, "error code=1 message=\"cannot write %s\"\n",
                             outcome.out_path.c_str());
                return 1;
            }
            out << outcome.output;
        }
    }
    return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superzeta: superzeta functions and zeta-regularized determinants"};
    app.require_subcommand(1);

    CommonOpts opts;
    const std::vector<std::string> commands = {
        "eval-superzeta", "eval-det", "residues",  "voros",
        "selberg-odd",    "selberg-even", "kleinian", "verify"};
    std::string chosen;
    for (const auto& name : commands) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", opts.config_path, "JSON job config path");
        sub->add_option("--out", opts.out_path, "output file (default: stdout)");
        sub->add_option("--format", opts.format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--target-rel-error", opts.target_rel_error,
                        "accuracy target override");
        sub->add_option("--threads", opts.threads, "grid evaluation threads");
        if (name == "verify")
            sub->add_option("--suite", opts.suite, "named verification suite");
        sub->callback([&chosen, name] { chosen = name; });
    }
    CLI11_PARSE(app, argc, argv);
    return execute(chosen, opts);
}

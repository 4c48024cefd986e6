#include "csnet/experiment/config.hpp"
#include "csnet/experiment/report.hpp"
#include "csnet/experiment/scenario.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

int run(const std::string& config_path, const std::string& output_override) {
    csnet::ExperimentConfig cfg;
    csnet::ExperimentReport report;
    try {
        cfg = csnet::load_config(config_path);
        report = csnet::run_experiment(cfg);
    } catch (const csnet::ConfigError& e) {
        std::cerr << "csnet: " << e.what() << '\n';
        return 2;
    }
    std::string dir = cfg.output_dir;
    if (const char* env = std::getenv("CSNET_OUTPUT_DIR"); env != nullptr && *env != '\0') dir = env;
    if (!output_override.empty()) dir = output_override;
    try {
        csnet::write_report(report, dir);
    } catch (const std::exception& e) {
        std::cerr << "csnet: " << e.what() << '\n';
        return 1;
    }
    for (const auto& f : report.failures)
        std::cerr << "csnet: trial failed (seed " << f.seed << ", " << f.params << "): " << f.message << '\n';
    std::cout << report.scenario << ": " << report.rows.size() << " rows, " << report.failures.size()
              << " failed trials -> " << dir << '\n';
    return report.exit_code();
}

void list() {
    for (const auto& s : csnet::scenario_registry()) {
        std::cout << s.id << "\t[" << s.topic << "]\t" << s.description << '\n';
        for (const auto& p : s.params) std::cout << "    " << p.name << " = " << p.fallback << "\t" << p.help << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compressed sensing for networked systems: experiment runner"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "run an experiment config");
    std::string config_path;
    std::string output_dir;
    run_cmd->add_option("config", config_path, "experiment config file")->required();
    run_cmd->add_option("-o,--output-dir", output_dir, "output directory (overrides config and CSNET_OUTPUT_DIR)");

    app.add_subcommand("list", "list scenarios and their parameters");
    app.add_subcommand("version", "print the toolkit version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (app.got_subcommand("run")) return run(config_path, output_dir);
    if (app.got_subcommand("list")) {
        list();
        return 0;
    }
    std::cout << "csnet " << csnet::kToolkitVersion << '\n';
    return 0;
}

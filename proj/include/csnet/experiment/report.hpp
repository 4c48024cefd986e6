#pragma once

#include "csnet/experiment/config.hpp"
#include "csnet/experiment/scenario.hpp"

#include <string>
#include <vector>

namespace csnet {

struct ReportRow {
    std::string scenario;
    std::uint64_t seed = 0;
    std::optional<Index> n, m, k, s;
    std::string params;
    std::string metric;
    double value = 0.0;
    /// Sweep point index, the last sort key.
    std::size_t point = 0;
};

struct TrialFailure {
    std::uint64_t seed = 0;
    std::string params;
    std::string message;
};

struct ExperimentReport {
    std::string scenario;
    std::string config_hash;
    std::vector<std::uint64_t> seeds;
    /// Name of the single swept parameter, empty unless exactly one varies.
    std::string sweep_param;
    std::vector<ParamSet> points;
    std::vector<ReportRow> rows;
    std::vector<TrialFailure> failures;

    int exit_code() const { return failures.empty() ? 0 : 1; }
};

/// Validates the configuration and runs every (point, seed) trial. Trials that
/// throw are recorded as failures. Rows are sorted by (seed, metric, point).
ExperimentReport run_experiment(const ExperimentConfig& config);

/// %.12g, with magnitudes below 1e-12 printed as 0 and "nan", "inf" and
/// "-inf" spelled out.
std::string format_value(double value);

/// Header scenario,seed,n,m,k,s,params,metric,value then one line per row.
std::string report_csv(const ExperimentReport& report);
/// Deterministic JSON: header, per-point metric means, rows and failures.
std::string report_json(const ExperimentReport& report);
/// x,y files of the metric means against the swept parameter, keyed by file
/// name (plot_<param>_<metric>.csv). Empty unless one parameter is swept.
std::vector<std::pair<std::string, std::string>> plot_files(const ExperimentReport& report);

/// Writes report.csv, report.json, plot files and run_info.json (the only
/// file carrying a timestamp) into dir, creating it when needed.
void write_report(const ExperimentReport& report, const std::string& dir);

}  // namespace csnet

#include "csnet/experiment/report.hpp"

#include "csnet/core/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace csnet {

namespace {

using Json = nlohmann::ordered_json;

Json optional_index(const std::optional<Index>& v) { return v ? Json(*v) : Json(nullptr); }

// Rounded through the CSV formatting so both reports agree to 12 digits.
Json number(double v) { return std::isfinite(v) ? Json(std::stod(format_value(v))) : Json(format_value(v)); }

std::string optional_text(const std::optional<Index>& v) { return v ? std::to_string(*v) : std::string(); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::InvalidParameter, "cannot write '" + path.string() + "'");
    out << content;
}

/// Mean over seeds of every metric at every point, NaN values skipped.
std::map<std::pair<std::size_t, std::string>, std::pair<double, int>> point_means(const ExperimentReport& r) {
    std::map<std::pair<std::size_t, std::string>, std::pair<double, int>> acc;
    for (const auto& row : r.rows) {
        auto& slot = acc[{row.point, row.metric}];
        if (std::isnan(row.value)) continue;
        slot.first += row.value;
        slot.second += 1;
    }
    for (auto& [key, v] : acc) v.first = v.second > 0 ? v.first / v.second : std::nan("");
    return acc;
}

}  // namespace

std::string format_value(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (std::abs(value) < 1e-12) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    const Scenario* scenario = find_scenario(config.scenario);
    if (scenario == nullptr) throw ConfigError("unknown scenario '" + config.scenario + "'");
    ExperimentReport report;
    report.scenario = scenario->id;
    report.config_hash = config.hash;
    report.seeds = config.seeds;
    report.points = expand_params(*scenario, config.params);

    std::set<std::string> varying;
    for (const auto& spec : scenario->params) {
        std::set<std::string> seen;
        for (const auto& point : report.points) seen.insert(point.text(spec.name));
        if (seen.size() > 1) varying.insert(spec.name);
    }
    if (varying.size() == 1) report.sweep_param = *varying.begin();

    for (std::size_t pi = 0; pi < report.points.size(); ++pi) {
        const ParamSet& point = report.points[pi];
        const std::string snapshot = point.snapshot();
        for (std::uint64_t seed : config.seeds) {
            TrialOutput out;
            try {
                out = scenario->run(point, seed);
            } catch (const std::exception& e) {
                report.failures.push_back({seed, snapshot, e.what()});
                report.rows.push_back({report.scenario, seed, {}, {}, {}, {}, snapshot, "failed", 1.0, pi});
                continue;
            }
            for (const auto& [metric, value] : out.metrics)
                report.rows.push_back({report.scenario, seed, out.n, out.m, out.k, out.s, snapshot, metric, value, pi});
        }
    }
    std::stable_sort(report.rows.begin(), report.rows.end(), [](const ReportRow& a, const ReportRow& b) {
        if (a.seed != b.seed) return a.seed < b.seed;
        if (a.metric != b.metric) return a.metric < b.metric;
        return a.point < b.point;
    });
    return report;
}

std::string report_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "scenario,seed,n,m,k,s,params,metric,value\n";
    for (const auto& r : report.rows) {
        out << csv_field(r.scenario) << ',' << r.seed << ',' << optional_text(r.n) << ',' << optional_text(r.m) << ','
            << optional_text(r.k) << ',' << optional_text(r.s) << ',' << csv_field(r.params) << ','
            << csv_field(r.metric) << ',' << format_value(r.value) << '\n';
    }
    return out.str();
}

std::string report_json(const ExperimentReport& report) {
    Json j;
    j["toolkit_version"] = kToolkitVersion;
    j["config_hash"] = report.config_hash;
    j["scenario"] = report.scenario;
    j["seeds"] = report.seeds;
    j["sweep_param"] = report.sweep_param;

    const auto means = point_means(report);
    Json points = Json::array();
    for (std::size_t pi = 0; pi < report.points.size(); ++pi) {
        Json p;
        Json params = Json::object();
        for (const auto& [k, v] : report.points[pi].values()) params[k] = v;
        p["params"] = params;
        Json metrics = Json::object();
        for (const auto& [key, v] : means)
            if (key.first == pi) metrics[key.second] = {{"mean", number(v.first)}, {"count", v.second}};
        p["metrics"] = metrics;
        points.push_back(p);
    }
    j["points"] = points;

    Json rows = Json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"seed", r.seed},
                        {"n", optional_index(r.n)},
                        {"m", optional_index(r.m)},
                        {"k", optional_index(r.k)},
                        {"s", optional_index(r.s)},
                        {"params", r.params},
                        {"metric", r.metric},
                        {"value", number(r.value)}});
    }
    j["rows"] = rows;

    Json failures = Json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"seed", f.seed}, {"params", f.params}, {"message", f.message}});
    j["failures"] = failures;
    return j.dump(2) + "\n";
}

std::vector<std::pair<std::string, std::string>> plot_files(const ExperimentReport& report) {
    std::vector<std::pair<std::string, std::string>> files;
    if (report.sweep_param.empty()) return files;
    const auto means = point_means(report);
    std::set<std::string> metrics;
    for (const auto& [key, v] : means) metrics.insert(key.second);
    for (const auto& metric : metrics) {
        std::ostringstream out;
        out << "x,y\n";
        for (std::size_t pi = 0; pi < report.points.size(); ++pi) {
            const auto it = means.find({pi, metric});
            if (it == means.end()) continue;
            out << report.points[pi].text(report.sweep_param) << ',' << format_value(it->second.first) << '\n';
        }
        files.emplace_back("plot_" + report.sweep_param + "_" + metric + ".csv", out.str());
    }
    return files;
}

void write_report(const ExperimentReport& report, const std::string& dir) {
    const std::filesystem::path root(dir);
    std::filesystem::create_directories(root);
    write_file(root / "report.csv", report_csv(report));
    write_file(root / "report.json", report_json(report));
    for (const auto& [name, content] : plot_files(report)) write_file(root / name, content);

    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
    Json info;
    info["toolkit_version"] = kToolkitVersion;
    info["config_hash"] = report.config_hash;
    info["scenario"] = report.scenario;
    info["timestamp"] = stamp;
    info["trials"] = report.points.size() * report.seeds.size();
    info["failures"] = report.failures.size();
    write_file(root / "run_info.json", info.dump(2) + "\n");
}

}  // namespace csnet

#include "csnet/experiment/config.hpp"
#include "csnet/experiment/report.hpp"
#include "csnet/experiment/scenario.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

using namespace csnet;

namespace {

ExperimentConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

const char* kOmpSweep =
    "[experiment]\n"
    "scenario = omp-sweep\n"
    "seeds = 0-99\n"
    "output_dir = out\n"
    "\n"
    "[params]\n"
    "n = 256\n"
    "m = 20:80:10\n"
    "k = 5\n";

}  // namespace

TEST(Config, ParsesSectionsAndSeeds) {
    const auto cfg = parse(kOmpSweep);
    EXPECT_EQ(cfg.scenario, "omp-sweep");
    EXPECT_EQ(cfg.output_dir, "out");
    ASSERT_EQ(cfg.seeds.size(), 100u);
    EXPECT_EQ(cfg.seeds.front(), 0u);
    EXPECT_EQ(cfg.seeds.back(), 99u);
    EXPECT_EQ(cfg.params.at("m"), "20:80:10");
    EXPECT_EQ(cfg.hash.size(), 16u);
}

TEST(Config, SeedLists) {
    EXPECT_EQ(parse_seeds("3, 7-9,1"), (std::vector<std::uint64_t>{3, 7, 8, 9, 1}));
    EXPECT_THROW(parse_seeds("1,1"), ConfigError);
    EXPECT_THROW(parse_seeds("5-2"), ConfigError);
    EXPECT_THROW(parse_seeds("a"), ConfigError);
    EXPECT_THROW(parse_seeds("1,,2"), ConfigError);
}

TEST(Config, RejectsUnknownKeysAndSections) {
    EXPECT_THROW(parse("[experiment]\nscenario = omp-sweep\nseeds = 0\ncolour = red\n"), ConfigError);
    EXPECT_THROW(parse("[experiment]\nscenario = omp-sweep\nseeds = 0\n[extra]\na = 1\n"), ConfigError);
    EXPECT_THROW(parse("[experiment]\nseeds = 0\n"), ConfigError);
    EXPECT_THROW(parse("[experiment]\nscenario = omp-sweep\n"), ConfigError);
}

TEST(Config, HashTracksText) {
    // Reference value of 64-bit FNV-1a on "a".
    EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
    EXPECT_NE(parse(kOmpSweep).hash, parse(std::string(kOmpSweep) + "\n").hash);
}

TEST(Scenarios, RegistryIsComplete) {
    const auto& reg = scenario_registry();
    EXPECT_GE(reg.size(), 24u);
    std::set<std::string> ids;
    for (const auto& s : reg) {
        EXPECT_TRUE(ids.insert(s.id).second) << s.id;
        EXPECT_FALSE(s.topic.empty());
        EXPECT_TRUE(static_cast<bool>(s.run));
    }
    for (const char* id : {"omp-sweep", "cdg", "srmf", "path-monitoring", "uwb", "matrix-completion"})
        EXPECT_NE(find_scenario(id), nullptr) << id;
    EXPECT_EQ(find_scenario("nope"), nullptr);
}

TEST(Scenarios, ExpandRangesAndProducts) {
    const Scenario* s = find_scenario("omp-sweep");
    ASSERT_NE(s, nullptr);
    const auto points = expand_params(*s, {{"m", "20:80:10"}, {"k", "3,5"}});
    ASSERT_EQ(points.size(), 14u);
    EXPECT_EQ(points[0].integer("m"), 20);
    EXPECT_EQ(points[0].integer("k"), 3);
    EXPECT_EQ(points[1].integer("k"), 5);
    EXPECT_EQ(points[13].integer("m"), 80);
    EXPECT_EQ(points[0].integer("n"), 256);
    EXPECT_EQ(points[0].text("recipe"), "gaussian");
}

TEST(Scenarios, ExpandRejectsBadInput) {
    const Scenario* s = find_scenario("omp-sweep");
    ASSERT_NE(s, nullptr);
    EXPECT_THROW(expand_params(*s, {{"sparsityy", "3"}}), ConfigError);
    EXPECT_THROW(expand_params(*s, {{"m", "ten"}}), ConfigError);
    EXPECT_THROW(expand_params(*s, {{"m", "80:20:10"}}), ConfigError);
    EXPECT_THROW(expand_params(*s, {{"m", "2.5"}}), ConfigError);
}

TEST(Report, FormatValue) {
    EXPECT_EQ(format_value(0.5), "0.5");
    EXPECT_EQ(format_value(1e-15), "0");
    EXPECT_EQ(format_value(-3e-13), "0");
    EXPECT_EQ(format_value(std::nan("")), "nan");
    EXPECT_EQ(format_value(std::numeric_limits<double>::infinity()), "inf");
    EXPECT_EQ(format_value(1.0 / 3.0), "0.333333333333");
}

TEST(Report, OmpSweepRowsAndDeterminism) {
    auto cfg = parse(kOmpSweep);
    const auto a = run_experiment(cfg);
    EXPECT_EQ(a.exit_code(), 0);
    EXPECT_EQ(a.sweep_param, "m");
    const auto exact = std::count_if(a.rows.begin(), a.rows.end(),
                                     [](const ReportRow& r) { return r.metric == "support_exact"; });
    EXPECT_EQ(exact, 100 * 7);

    const auto b = run_experiment(cfg);
    EXPECT_EQ(report_csv(a), report_csv(b));
    EXPECT_EQ(report_json(a), report_json(b));
    EXPECT_EQ(plot_files(a), plot_files(b));

    const std::string csv = report_csv(a);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "scenario,seed,n,m,k,s,params,metric,value");
    const auto plots = plot_files(a);
    const auto it = std::find_if(plots.begin(), plots.end(),
                                 [](const auto& f) { return f.first == "plot_m_support_exact.csv"; });
    ASSERT_NE(it, plots.end());
    EXPECT_EQ(std::count(it->second.begin(), it->second.end(), '\n'), 8);
}

TEST(Report, FailedTrialsAreRecorded) {
    auto cfg = parse("[experiment]\nscenario = omp-sweep\nseeds = 0-2\n[params]\nn = 8\nk = 20\n");
    const auto r = run_experiment(cfg);
    EXPECT_EQ(r.failures.size(), 3u);
    EXPECT_EQ(r.exit_code(), 1);
    for (const auto& row : r.rows) EXPECT_EQ(row.metric, "failed");
}

TEST(Report, UnknownScenarioThrows) {
    EXPECT_THROW(run_experiment(parse("[experiment]\nscenario = nope\nseeds = 0\n")), ConfigError);
}

// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line.
// Usage: acceptance [criterion-number]

#include "csnet/core/basis.hpp"
#include "csnet/core/diagnostics.hpp"
#include "csnet/core/rng.hpp"
#include "csnet/core/sensing.hpp"
#include "csnet/experiment/config.hpp"
#include "csnet/experiment/report.hpp"
#include "csnet/physim/erasure.hpp"
#include "csnet/physim/spectrum.hpp"
#include "csnet/solvers/cosamp.hpp"
#include "csnet/solvers/l0_oracle.hpp"
#include "csnet/solvers/omp.hpp"
#include "csnet/wsn/network.hpp"
#include "csnet/wsn/srp.hpp"
#include "csnet/wsn/transport.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using namespace csnet;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

ExperimentReport run(const std::string& ini) {
    std::istringstream in(ini);
    return run_experiment(parse_config(in));
}

/// Metric values of every row, optionally restricted to one sweep point.
std::vector<double> values(const ExperimentReport& r, const std::string& metric,
                           std::optional<std::size_t> point = std::nullopt) {
    std::vector<double> out;
    for (const auto& row : r.rows)
        if (row.metric == metric && (!point || row.point == *point)) out.push_back(row.value);
    return out;
}

int count_ones(const std::vector<double>& v) {
    return static_cast<int>(std::count(v.begin(), v.end(), 1.0));
}

double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? std::nan("") : s / static_cast<double>(v.size());
}

double max_finite(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v)
        if (std::isfinite(x)) m = std::max(m, x);
    return m;
}

void subsets(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> s(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            visit(s);
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            s[static_cast<std::size_t>(depth)] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

Matrix columns(const Matrix& a, const std::vector<int>& idx) {
    Matrix out(a.rows(), static_cast<Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) out.col(static_cast<Index>(j)) = a.col(idx[j]);
    return out;
}

/// Smallest support reproducing y exactly, by enumeration with QR solves.
std::vector<int> reference_l0(const Matrix& phi, const Vector& y, int k_max) {
    for (int k = 1; k <= k_max; ++k) {
        std::vector<int> best;
        double best_res = 1e-9 * std::max(1.0, y.norm());
        subsets(static_cast<int>(phi.cols()), k, [&](const std::vector<int>& s) {
            const Matrix a = columns(phi, s);
            const Vector c = a.colPivHouseholderQr().solve(y);
            const double res = (a * c - y).norm();
            if (res < best_res) {
                best_res = res;
                best = s;
            }
        });
        if (!best.empty()) return best;
    }
    return {};
}

double reference_coherence(const Matrix& phi) {
    double mu = 0.0;
    for (Index i = 0; i < phi.cols(); ++i)
        for (Index j = i + 1; j < phi.cols(); ++j)
            mu = std::max(mu, std::abs(phi.col(i).dot(phi.col(j))) / (phi.col(i).norm() * phi.col(j).norm()));
    return mu;
}

int reference_spark(const Matrix& phi) {
    const int n = static_cast<int>(phi.cols());
    for (int k = 1; k <= n; ++k) {
        bool dependent = false;
        subsets(n, k, [&](const std::vector<int>& s) {
            if (dependent) return;
            if (k > phi.rows()) {
                dependent = true;
                return;
            }
            Eigen::JacobiSVD<Matrix> svd(columns(phi, s));
            const auto sv = svd.singularValues();
            if (sv(sv.size() - 1) <= 1e-10 * std::max(1.0, sv(0))) dependent = true;
        });
        if (dependent) return k;
    }
    return n + 1;
}

/// Isometry constant from singular values of every k-column submatrix.
double reference_rip(const Matrix& phi, int k) {
    double delta = 0.0;
    subsets(static_cast<int>(phi.cols()), k, [&](const std::vector<int>& s) {
        Eigen::JacobiSVD<Matrix> svd(columns(phi, s));
        const auto sv = svd.singularValues();
        delta = std::max({delta, sv(0) * sv(0) - 1.0, 1.0 - sv(sv.size() - 1) * sv(sv.size() - 1)});
    });
    return delta;
}

Outcome oracle_equivalence() {
    int failures = 0, instances = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(derive_seed(seed, {7}));
        const Index n = 8 + static_cast<Index>(rng.below(9));
        const int k = 1 + static_cast<int>(seed % 2);
        Matrix phi;
        double mu = 1.0;
        for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
            phi = normalize_columns(gen_sensing_matrix(Recipe::Gaussian, 96, n, derive_seed(seed, {8, attempt})).entries);
            mu = reference_coherence(phi);
            if (k < (1.0 + 1.0 / mu) / 2.0) break;
        }
        if (k >= (1.0 + 1.0 / mu) / 2.0) return {false, "coherence condition never met at seed " + std::to_string(seed)};
        Vector x = Vector::Zero(n);
        for (auto i : rng.choose(n, k)) x(i) = rng.sign() * rng.uniform(1.0, 2.0);
        const Vector y = phi * x;
        const auto ref = reference_l0(phi, y, k);
        const Support truth(ref.begin(), ref.end());
        ++instances;
        const bool ok = l0_oracle(phi, y, k).support == truth && omp(phi, y, 0.0, k).support == truth &&
                        cosamp(phi, y, k).support == truth;
        if (!ok) ++failures;
    }
    return {failures == 0, std::to_string(instances - failures) + "/" + std::to_string(instances) +
                               " instances where l0_oracle, omp and cosamp all match the enumerated support"};
}

Outcome spark_coherence() {
    int violations = 0, mismatches = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(derive_seed(seed, {11}));
        const Index m = 3 + static_cast<Index>(rng.below(3));
        const Index n = m + 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(m)));
        const Recipe recipe = seed % 2 == 0 ? Recipe::Gaussian : Recipe::Bernoulli;
        Matrix phi = gen_sensing_matrix(recipe, m, n, derive_seed(seed, {12})).entries;
        if (seed % 5 == 0) phi.col(n - 1) = phi.col(0) + 0.5 * phi.col(1);
        const int spark = reference_spark(phi);
        const auto lib = spark_bruteforce(phi, static_cast<int>(n));
        if (!lib || *lib != spark) ++mismatches;
        if (static_cast<double>(spark) < 1.0 + 1.0 / reference_coherence(phi) - 1e-12) ++violations;
    }
    return {violations == 0 && mismatches == 0,
            std::to_string(violations) + " bound violations, " + std::to_string(mismatches) +
                " library/reference spark mismatches over 200 matrices"};
}

Outcome rip() {
    double ortho = 0.0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Matrix g = gen_sensing_matrix(Recipe::Gaussian, 8, 8, derive_seed(seed, {21})).entries;
        const Matrix q = Eigen::HouseholderQR<Matrix>(g).householderQ() * Matrix::Identity(8, 8);
        for (int k = 1; k <= 3; ++k) ortho = std::max(ortho, rip_constant_bruteforce(q, k));
    }
    Matrix ii(5, 10);
    ii << Matrix::Identity(5, 5), Matrix::Identity(5, 5);
    const double d_ii = rip_constant_bruteforce(ii, 2);
    double diff = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Matrix phi =
            normalize_columns(gen_sensing_matrix(Recipe::Gaussian, 6, 12, derive_seed(seed, {22})).entries);
        for (int k = 1; k <= 3; ++k) diff = std::max(diff, std::abs(rip_constant_bruteforce(phi, k) - reference_rip(phi, k)));
    }
    const bool pass = ortho < 1e-12 && std::abs(d_ii - 1.0) < 1e-12 && diff < 1e-12;
    return {pass, "orthonormal max delta " + fmt("%.2e", ortho) + ", [I|I] delta_2 " + fmt("%.15g", d_ii) +
                      ", gaussian max diff " + fmt("%.2e", diff)};
}

Outcome omp_phase() {
    const auto r = run("[experiment]\nscenario = omp-sweep\nseeds = 0-99\n[params]\nn = 256\nk = 5\nm = 79,7\n");
    const int high = count_ones(values(r, "support_exact", 0));
    const int low = count_ones(values(r, "support_exact", 1));
    return {r.failures.empty() && high >= 95 && low <= 20,
            "exact support " + std::to_string(high) + "/100 at m=79, " + std::to_string(low) + "/100 at m=7"};
}

Outcome mmv_halving() {
    const auto r = run("[experiment]\nscenario = mmv\nseeds = 0-99\n[params]\nn = 64\nk = 5\nm = 6\n");
    const int joint = count_ones(values(r, "somp_exact"));
    const double failed = mean(values(r, "omp_failed_fraction"));
    return {r.failures.empty() && joint >= 95 && failed >= 0.3,
            "somp exact " + std::to_string(joint) + "/100, per-column omp failed in " + fmt("%.1f", 100 * failed) +
                "% of columns (m = k + 1 = 6)"};
}

Outcome aic() {
    const auto r = run("[experiment]\nscenario = aic\nseeds = 0-49\n[params]\nn = 256\nm = 43\ntones = 1,2\n");
    const auto exact = values(r, "support_exact");
    const int hits = count_ones(exact);
    const double amp = max_finite(values(r, "amplitude_error"));
    return {r.failures.empty() && hits >= 90 && amp < 0.01,
            std::to_string(hits) + "/100 exact frequency supports, worst amplitude error " + fmt("%.2e", amp)};
}

Outcome spectrum_and_consensus() {
    const auto r = run("[experiment]\nscenario = spectrum\nseeds = 0-99\n[params]\nn = 256\nbands = 32\noccupied = 3\nratio = 0.5\n");
    const int hits = count_ones(values(r, "occupancy_exact"));

    struct Family {
        std::string name;
        std::vector<Matrix> graphs;
    };
    std::vector<Family> families{{"path", {path_graph(8)}},
                                 {"ring", {ring_graph(8)}},
                                 {"star", {star_graph(8)}},
                                 {"complete", {complete_graph(8)}},
                                 {"G(8,0.5)", {}}};
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        families.back().graphs.push_back(random_connected_graph(8, 0.5, derive_seed(seed, {31})));
    int worst_all = 0;
    bool all_converged = true;
    std::string per_family;
    for (const auto& f : families) {
        int worst = 0;
        for (std::size_t g = 0; g < f.graphs.size(); ++g) {
            Rng rng(derive_seed(g, {32}));
            Matrix u0(8, 32);
            for (Index i = 0; i < u0.size(); ++i) u0(i) = rng.bernoulli(0.5) ? 1.0 : 0.0;
            const auto t = consensus_until(u0, f.graphs[g], 1e-6, 5000);
            all_converged = all_converged && t.converged;
            worst = std::max(worst, t.iterations);
        }
        worst_all = std::max(worst_all, worst);
        per_family += " " + f.name + "=" + std::to_string(worst);
    }
    const bool pass = r.failures.empty() && hits >= 95 && all_converged && worst_all <= 200;
    return {pass, "occupancy exact " + std::to_string(hits) + "/100; consensus iterations to 1e-6:" + per_family +
                      " (limit 200)"};
}

Outcome uwb() {
    const auto r = run("[experiment]\nscenario = uwb\nseeds = 0-99\n[params]\nn = 512\nrate = 0.1\nechoes = 3\n");
    const int hits = count_ones(values(r, "delays_exact"));
    return {r.failures.empty() && hits >= 90, std::to_string(hits) + "/100 delay-exact recoveries (m = 51, 3 echoes)"};
}

Outcome cdg_invariants() {
    const auto r = run(
        "[experiment]\nscenario = cdg\nseeds = 0-19\n[params]\nn = 64,100,144\nm = 10,30\ntopology = grid,rgg\n"
        "radius = 0.25\n");
    int bad_count = 0, bad_root = 0, bad_hybrid = 0, instances = 0;
    for (std::size_t p = 0; p < r.points.size(); ++p) {
        const auto m = static_cast<double>(r.points[p].integer("m"));
        const auto lo = values(r, "min_node_tx", p), hi = values(r, "max_node_tx", p);
        const auto root = values(r, "root_error", p);
        const auto cdg = values(r, "cdg_cost", p), hybrid = values(r, "hybrid_cost", p);
        for (std::size_t i = 0; i < lo.size(); ++i) {
            ++instances;
            if (lo[i] != m || hi[i] != m) ++bad_count;
            if (!(root[i] <= 1e-9)) ++bad_root;
            if (hybrid[i] > cdg[i]) ++bad_hybrid;
        }
    }
    const bool pass = r.failures.empty() && instances == 240 && bad_count + bad_root + bad_hybrid == 0;
    return {pass, std::to_string(instances) + " instances, " + std::to_string(r.failures.size()) + " failed trials; violations: per-node count " +
                      std::to_string(bad_count) + ", root measurement " + std::to_string(bad_root) + ", hybrid cost " +
                      std::to_string(bad_hybrid)};
}

Outcome transport_scaling() {
    const auto rep = transport_cost_report({64, 144, 256}, 5, 4, {0, 1, 2, 3, 4});
    double worst_cdg = 0.0;
    for (const auto& row : rep.rows) worst_cdg = std::max(worst_cdg, row.cdg / static_cast<double>(row.n * row.m));
    double worst_srp = 0.0;
    std::string srp_detail;
    for (int s : {2, 4, 8}) {
        double ratio = 0.0;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto net = build_network(256, Topology::Grid, seed);
            const auto run = srp_run(net, Vector::Ones(256), s, 80, derive_seed(seed, {41}));
            ratio += static_cast<double>(run.cost.dissemination_messages) / (256.0 * 80.0) / 10.0;
        }
        const double rel = std::abs(ratio * s - 1.0);
        worst_srp = std::max(worst_srp, rel);
        srp_detail += " s=" + std::to_string(s) + ":" + fmt("%.3f", ratio);
    }
    const bool pass = std::abs(rep.conventional_exponent - 1.5) <= 0.15 && worst_cdg <= 1.3 && worst_srp <= 0.2;
    return {pass, "conventional exponent " + fmt("%.3f", rep.conventional_exponent) + ", max CDG/(n m) " +
                      fmt("%.3f", worst_cdg) + ", SRP dissemination/(n m)" + srp_detail};
}

Outcome erasure() {
    const auto r = run("[experiment]\nscenario = erasure\nseeds = 0-19\n[params]\nn = 128\nl = 64\ne = 0\nsignal = sparse\nk = 4\n");
    const double exact = max_finite(values(r, "relative_error"));
    const Matrix psi = dft_real_basis(128).entries;
    std::vector<Index> grid;
    for (Index e = 0; e < 64; e += 8) grid.push_back(e);
    SolverParams p;
    p.kind = SolverKind::Lasso;
    p.max_iter = 5000;
    int non_monotone = 0, jumps = 0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Vector x = psi * power_law_coefficients(128, 1.0, derive_seed(seed, {51}));
        const auto errs = erasure_sweep(x, psi, 64, grid, 10, derive_seed(seed, {52}), p);
        for (std::size_t g = 1; g < errs.size(); ++g) {
            if (errs[g] < errs[g - 1]) ++non_monotone;
            if (errs[g] > 3.0 * errs[g - 1]) ++jumps;
        }
    }
    const bool pass = r.failures.empty() && exact < 1e-6 && non_monotone == 0 && jumps == 0;
    return {pass, "e=0 sparse max relative error " + fmt("%.2e", exact) + "; power-law curves: " +
                      std::to_string(non_monotone) + " decreasing steps, " + std::to_string(jumps) + " jumps > 3x"};
}

Outcome matrix_completion() {
    const char* settings[] = {"n1 = 10\nn2 = 10\nr = 1\nfraction = 0.6\n", "n1 = 50\nn2 = 50\nr = 1\nfraction = 0.35\n",
                              "n1 = 30\nn2 = 30\nr = 2\nfraction = 0.6\n", "n1 = 50\nn2 = 50\nr = 2\nfraction = 0.5\n"};
    double worst = 0.0;
    int non_monotone = 0, failures = 0;
    for (const char* s : settings) {
        const auto r = run(std::string("[experiment]\nscenario = matrix-completion\nseeds = 0-4\n[params]\n") + s);
        failures += static_cast<int>(r.failures.size());
        for (double e : values(r, "relative_error")) worst = std::max(worst, std::isfinite(e) ? e : 1e300);
        for (double m : values(r, "objective_monotone")) non_monotone += m != 1.0;
    }
    return {failures == 0 && worst < 1e-2 && non_monotone == 0,
            "20 runs, worst relative Frobenius error " + fmt("%.2e", worst) + ", " + std::to_string(non_monotone) +
                " runs with an increasing objective"};
}

Outcome srmf_ordering() {
    const auto r = run("[experiment]\nscenario = srmf\nseeds = 0-19\n[params]\npattern = random,column-outage\nmissing = 0.8,0.95\n");
    bool pass = r.failures.empty();
    std::string detail;
    for (std::size_t p = 0; p < r.points.size(); ++p) {
        const int a = count_ones(values(r, "srmf_wins", p)), b = count_ones(values(r, "srmf_knn_wins", p));
        pass = pass && a >= 15 && b >= 15;
        detail += (p ? "; " : "") + r.points[p].text("pattern") + "@" + r.points[p].text("missing") + " SRMF " +
                  std::to_string(a) + "/20, +KNN " + std::to_string(b) + "/20";
    }
    return {pass, detail};
}

Outcome path_monitoring() {
    const auto r = run("[experiment]\nscenario = path-monitoring\nseeds = 0-19\n[params]\npaths = 30\nper_step = 3\nsteps = 50\n");
    const auto errs = values(r, "mean_relative_error");
    const auto above = std::count_if(errs.begin(), errs.end(), [](double e) { return !(e < 0.1); });
    const double avg = mean(errs);
    return {r.failures.empty() && errs.size() == 20 && avg < 0.1,
            "50-step mean-delay error averaged over 20 seeds " + fmt("%.2f", 100 * avg) + "% (worst seed " +
                fmt("%.2f", 100 * max_finite(errs)) + "%, " + std::to_string(above) + "/20 seeds at or above 10%)"};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism() {
    namespace fs = std::filesystem;
    const fs::path root = fs::temp_directory_path() / ("csnet_acceptance_" + std::to_string(::getpid()));
    std::vector<fs::path> configs;
    for (const auto& e : fs::directory_iterator(CSNET_CONFIG_DIR))
        if (e.path().extension() == ".ini") configs.push_back(e.path());
    std::sort(configs.begin(), configs.end());
    int differing = 0;
    std::string which;
    for (const auto& c : configs) {
        const auto cfg = load_config(c.string());
        const fs::path a = root / c.stem() / "a", b = root / c.stem() / "b";
        write_report(run_experiment(cfg), a.string());
        write_report(run_experiment(cfg), b.string());
        bool same = true;
        for (const auto& f : fs::directory_iterator(a)) {
            if (f.path().filename() == "run_info.json") continue;
            const fs::path twin = b / f.path().filename();
            same = same && fs::exists(twin) && slurp(f.path()) == slurp(twin);
        }
        if (!same) {
            ++differing;
            which += " " + c.stem().string();
        }
    }
    fs::remove_all(root);
    return {!configs.empty() && differing == 0,
            std::to_string(configs.size() - static_cast<std::size_t>(differing)) + "/" +
                std::to_string(configs.size()) + " shipped configs byte-identical across two runs" + which};
}

struct Criterion {
    const char* name;
    Outcome (*check)();
};

const Criterion kCriteria[] = {
    {"oracle equivalence", oracle_equivalence},
    {"spark-coherence bound", spark_coherence},
    {"RIP brute force", rip},
    {"OMP phase behavior", omp_phase},
    {"MMV halving", mmv_halving},
    {"AIC sub-Nyquist", aic},
    {"spectrum sensing and consensus", spectrum_and_consensus},
    {"UWB echoes", uwb},
    {"CDG invariants", cdg_invariants},
    {"transport-cost scaling", transport_scaling},
    {"erasure graceful degradation", erasure},
    {"matrix completion", matrix_completion},
    {"SRMF ordering", srmf_ordering},
    {"path monitoring", path_monitoring},
    {"determinism", determinism},
};

}  // namespace

int main(int argc, char** argv) {
    constexpr int count = static_cast<int>(std::size(kCriteria));
    int first = 1, last = count;
    if (argc > 1) {
        first = last = std::atoi(argv[1]);
        if (first < 1 || first > count) {
            std::cerr << "criterion must be 1.." << count << "\n";
            return 2;
        }
    }
    int failed = 0;
    for (int i = first; i <= last; ++i) {
        const auto& c = kCriteria[i - 1];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}

#include "csnet/experiment/config.hpp"
#include "csnet/experiment/scenario.hpp"

#include "csnet/core/basis.hpp"
#include "csnet/core/diagnostics.hpp"
#include "csnet/core/error.hpp"
#include "csnet/core/rng.hpp"
#include "csnet/core/sensing.hpp"
#include "csnet/matcomp/completion.hpp"
#include "csnet/netmon/paths.hpp"
#include "csnet/netmon/routing.hpp"
#include "csnet/netmon/sketch.hpp"
#include "csnet/physim/aic.hpp"
#include "csnet/physim/erasure.hpp"
#include "csnet/physim/mimo.hpp"
#include "csnet/physim/random_access.hpp"
#include "csnet/physim/spectrum.hpp"
#include "csnet/physim/uwb.hpp"
#include "csnet/solvers/cosamp.hpp"
#include "csnet/solvers/l0_oracle.hpp"
#include "csnet/solvers/omp.hpp"
#include "csnet/solvers/recover.hpp"
#include "csnet/solvers/somp.hpp"
#include "csnet/tmc/srmf.hpp"
#include "csnet/wsn/anomaly.hpp"
#include "csnet/wsn/dcs.hpp"
#include "csnet/wsn/gathering.hpp"
#include "csnet/wsn/network.hpp"
#include "csnet/wsn/srp.hpp"
#include "csnet/wsn/transport.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace csnet {

namespace {

ParamSpec integer(std::string name, std::string fallback, std::string help) {
    return {std::move(name), ParamType::Integer, std::move(fallback), std::move(help)};
}

ParamSpec real(std::string name, std::string fallback, std::string help) {
    return {std::move(name), ParamType::Real, std::move(fallback), std::move(help)};
}

ParamSpec text(std::string name, std::string fallback, std::string help) {
    return {std::move(name), ParamType::Text, std::move(fallback), std::move(help)};
}

Recipe parse_recipe(const std::string& name) {
    if (name == "gaussian") return Recipe::Gaussian;
    if (name == "bernoulli") return Recipe::Bernoulli;
    if (name == "sparse-random") return Recipe::SparseRandom;
    if (name == "binary-routing") return Recipe::BinaryRouting;
    fail(ErrorKind::InvalidParameter, "unknown recipe '" + name + "'");
}

Vector planted(Index n, Index k, Rng& rng) {
    Vector x = Vector::Zero(n);
    for (auto i : rng.choose(n, k)) x(i) = rng.sign() * rng.uniform(1.0, 2.0);
    return x;
}

Support sorted_support(const std::vector<std::int64_t>& draw) {
    Support s(draw.begin(), draw.end());
    std::sort(s.begin(), s.end());
    return s;
}

double relative_error(const Vector& est, const Vector& truth) {
    const double norm = truth.norm();
    return norm > 0.0 ? (est - truth).norm() / norm : est.norm();
}

double flag(bool b) { return b ? 1.0 : 0.0; }

SolverParams lasso(double ratio) {
    SolverParams p;
    p.kind = SolverKind::Lasso;
    p.lambda_ratio = ratio;
    p.max_iter = 20000;
    p.debias = true;
    return p;
}

SolverParams solver_from(const std::string& name, int k) {
    SolverParams p;
    p.kind = parse_solver_kind(name);
    if (p.kind == SolverKind::Lasso) p = lasso(1e-3);
    p.k = k;
    return p;
}

TrialOutput sparse_recovery(const ParamSet& p, std::uint64_t seed, SolverKind kind) {
    const Index n = p.integer("n"), m = p.integer("m"), k = p.integer("k");
    require(k >= 0 && k <= n && m >= 1, "recovery: need 0 <= k <= n and m >= 1");
    const Recipe recipe = parse_recipe(p.text("recipe"));
    const auto s = static_cast<int>(p.integer("s"));
    const Matrix raw = gen_sensing_matrix(recipe, m, n, derive_seed(seed, {0}), s).entries;
    const Vector norms = column_norms(raw);
    const Matrix phi = normalize_columns(raw);
    Rng rng(derive_seed(seed, {1}));
    const Vector x = planted(n, k, rng);
    SolverParams params;
    params.kind = kind;
    params.k = static_cast<int>(k);
    if (kind == SolverKind::Lasso) {
        params = lasso(p.real("lambda_ratio"));
        params.k = static_cast<int>(k);
    }
    const auto r = recover(phi, phi * x.cwiseProduct(norms), params);
    Vector est = Vector::Zero(n);
    for (Index j = 0; j < n; ++j)
        if (norms(j) > 0.0) est(j) = r.estimate(j) / norms(j);
    TrialOutput out;
    out.n = n;
    out.m = m;
    out.k = k;
    if (recipe == Recipe::SparseRandom) out.s = s;
    out.add("support_exact", flag(support_of(est, 1e-6) == support_of(x)));
    out.add("relative_error", relative_error(est, x));
    return out;
}

std::vector<ParamSpec> recovery_params(bool with_lambda) {
    std::vector<ParamSpec> ps{integer("n", "256", "signal length"), integer("m", "79", "measurements"),
                              integer("k", "5", "sparsity"),
                              text("recipe", "gaussian", "gaussian | bernoulli | sparse-random | binary-routing"),
                              integer("s", "3", "sparse-random measurement sparsity")};
    if (with_lambda) ps.push_back(real("lambda_ratio", "0.001", "lambda relative to ||phi^T y||_inf"));
    return ps;
}

std::vector<Scenario> build_registry() {
    std::vector<Scenario> reg;

    reg.push_back({"omp-sweep", "sparse recovery", "orthogonal matching pursuit on planted k-sparse signals",
                   recovery_params(false),
                   [](const ParamSet& p, std::uint64_t seed) { return sparse_recovery(p, seed, SolverKind::Omp); }});
    reg.push_back({"cosamp-sweep", "sparse recovery", "CoSaMP on planted k-sparse signals", recovery_params(false),
                   [](const ParamSet& p, std::uint64_t seed) { return sparse_recovery(p, seed, SolverKind::Cosamp); }});
    reg.push_back({"lasso-sweep", "sparse recovery", "ISTA lasso with least-squares debias on planted signals",
                   recovery_params(true),
                   [](const ParamSet& p, std::uint64_t seed) { return sparse_recovery(p, seed, SolverKind::Lasso); }});

    reg.push_back(
        {"oracle-equivalence", "sparse recovery",
         "greedy solvers against the exhaustive l0 solver under the coherence condition",
         {integer("n", "12", "signal length (at most 16)"), integer("m", "96", "measurements"),
          integer("k", "2", "sparsity (at most 2)")},
         [](const ParamSet& p, std::uint64_t seed) {
             const Index n = p.integer("n"), m = p.integer("m"), k = p.integer("k");
             require(n >= 2 && n <= 16 && k >= 1 && k <= 2, "oracle-equivalence: need n <= 16 and k <= 2");
             Matrix phi;
             double mu = 1.0;
             int attempts = 0;
             do {
                 phi = normalize_columns(
                     gen_sensing_matrix(Recipe::Gaussian, m, n, derive_seed(seed, {0, static_cast<std::uint64_t>(attempts)}))
                         .entries);
                 mu = self_coherence(phi);
                 ++attempts;
             } while (static_cast<double>(k) >= (1.0 + 1.0 / mu) / 2.0 && attempts < 1000);
             if (static_cast<double>(k) >= (1.0 + 1.0 / mu) / 2.0)
                 fail(ErrorKind::GenerationFailure, "oracle-equivalence: coherence condition never met");
             Rng rng(derive_seed(seed, {1}));
             const Vector y = phi * planted(n, k, rng);
             const Support truth = l0_oracle(phi, y, static_cast<int>(k)).support;
             TrialOutput out;
             out.n = n;
             out.m = m;
             out.k = k;
             out.add("coherence", mu);
             out.add("omp_match", flag(omp(phi, y, 0.0, static_cast<int>(k)).support == truth));
             out.add("cosamp_match", flag(cosamp(phi, y, static_cast<int>(k)).support == truth));
             return out;
         }});

    reg.push_back({"spark-coherence", "measurement matrix theory", "exhaustive spark against the 1 + 1/mu bound",
                   {integer("m", "5", "rows"), integer("n", "10", "columns"),
                    text("recipe", "gaussian", "matrix recipe"), integer("s", "2", "recipe sparsity")},
                   [](const ParamSet& p, std::uint64_t seed) {
                       const Index m = p.integer("m"), n = p.integer("n");
                       require(n <= 20, "spark-coherence: n must be at most 20");
                       const Matrix phi = gen_sensing_matrix(parse_recipe(p.text("recipe")), m, n, seed,
                                                             static_cast<int>(p.integer("s")))
                                              .entries;
                       if (column_norms(phi).minCoeff() == 0.0)
                           fail(ErrorKind::DegenerateInput, "spark-coherence: zero column drawn");
                       const double mu = self_coherence(phi);
                       const auto spark = spark_bruteforce(phi, static_cast<int>(n));
                       TrialOutput out;
                       out.n = n;
                       out.m = m;
                       out.add("coherence", mu);
                       out.add("spark", spark ? *spark : static_cast<double>(n + 1));
                       out.add("bound", 1.0 + 1.0 / mu);
                       out.add("violation", flag(spark && *spark < 1.0 + 1.0 / mu - 1e-9));
                       return out;
                   }});

    reg.push_back({"rip", "measurement matrix theory", "restricted isometry constant by exhaustive enumeration",
                   {integer("m", "6", "rows"), integer("n", "12", "columns"), integer("k", "2", "order"),
                    text("recipe", "gaussian", "matrix recipe")},
                   [](const ParamSet& p, std::uint64_t seed) {
                       const Index m = p.integer("m"), n = p.integer("n"), k = p.integer("k");
                       const Matrix phi = gen_sensing_matrix(parse_recipe(p.text("recipe")), m, n, seed).entries;
                       TrialOutput out;
                       out.n = n;
                       out.m = m;
                       out.k = k;
                       out.add("delta", rip_constant_bruteforce(phi, static_cast<int>(k)));
                       return out;
                   }});

    reg.push_back(
        {"mmv", "joint sparsity", "rank-aware simultaneous OMP against per-column OMP",
         {integer("n", "64", "signal length"), integer("k", "5", "row sparsity and rank"),
          integer("m", "6", "measurements")},
         [](const ParamSet& p, std::uint64_t seed) {
             const Index n = p.integer("n"), k = p.integer("k"), m = p.integer("m");
             require(k >= 1 && k <= n, "mmv: need 1 <= k <= n");
             const Matrix phi = normalize_columns(gen_sensing_matrix(Recipe::Gaussian, m, n, derive_seed(seed, {0})).entries);
             Rng rng(derive_seed(seed, {1}));
             const Support truth = sorted_support(rng.choose(n, k));
             Matrix x = Matrix::Zero(n, k);
             for (Index i : truth)
                 for (Index c = 0; c < k; ++c) x(i, c) = rng.normal();
             const Matrix y = phi * x;
             const auto joint = somp(phi, y, static_cast<int>(k), SompRule::RankAware);
             int failed = 0;
             for (Index c = 0; c < k; ++c)
                 if (omp(phi, y.col(c), 0.0, static_cast<int>(k)).support != truth) ++failed;
             TrialOutput out;
             out.n = n;
             out.m = m;
             out.k = k;
             out.add("somp_exact", flag(joint.common_support == truth));
             out.add("omp_failed_fraction", static_cast<double>(failed) / static_cast<double>(k));
             return out;
         }});

    reg.push_back(
        {"matrix-completion", "matrix completion", "fixed-point continuation on planted low-rank matrices",
         {integer("n1", "30", "rows"), integer("n2", "30", "columns"), integer("r", "2", "rank"),
          real("fraction", "0.5", "sampled fraction"), real("lambda_ratio", "0.001", "lambda relative to ||P(Y)||_2")},
         [](const ParamSet& p, std::uint64_t seed) {
             const Index n1 = p.integer("n1"), n2 = p.integer("n2"), r = p.integer("r");
             const auto samples = static_cast<Index>(std::lround(p.real("fraction") * static_cast<double>(n1 * n2)));
             const Matrix truth = planted_low_rank(n1, n2, r, derive_seed(seed, {0}));
             const Matrix mask = sample_mask(n1, n2, samples, derive_seed(seed, {1}));
             const MaskedMatrix obs{apply_mask(truth, mask), mask, 0.0};
             const double lambda = p.real("lambda_ratio") * Eigen::BDCSVD<Matrix>(obs.data).singularValues()(0);
             const auto res = fpc_complete(obs, lambda);
             bool monotone = true;
             for (std::size_t t = 1; t < res.objective_trace.size(); ++t)
                 monotone = monotone && res.objective_trace[t] <= res.objective_trace[t - 1] * (1 + 1e-12) + 1e-12;
             TrialOutput out;
             out.n = n1 * n2;
             out.m = samples;
             out.k = r;
             out.add("relative_error", (res.estimate - truth).norm() / truth.norm());
             out.add("objective_monotone", flag(monotone));
             out.add("converged", flag(res.converged));
             out.add("iterations", res.iterations);
             return out;
         }});

    auto topology = [](const std::string& name) {
        if (name == "grid") return Topology::Grid;
        if (name == "rgg" || name == "random-geometric") return Topology::RandomGeometric;
        fail(ErrorKind::InvalidParameter, "unknown topology '" + name + "'");
    };

    reg.push_back(
        {"cdg", "in-network data gathering", "compressive data gathering with per-node message counts",
         {integer("n", "100", "sensors"), integer("m", "20", "measurements"), text("topology", "grid", "grid | rgg"),
          real("radius", "0.2", "link radius for rgg")},
         [topology](const ParamSet& p, std::uint64_t seed) {
             const Index n = p.integer("n"), m = p.integer("m");
             auto net = build_network(n, topology(p.text("topology")), derive_seed(seed, {0}), p.real("radius"));
             const Matrix phi = gen_sensing_matrix(Recipe::Gaussian, m, n, derive_seed(seed, {1})).entries;
             Rng rng(derive_seed(seed, {2}));
             Vector x(n);
             for (Index i = 0; i < n; ++i) x(i) = rng.normal();
             const auto cdg = cdg_collect(net, x, phi);
             long lo = cdg.tx_counts.size() > 1 ? cdg.tx_counts[1] : 0, hi = lo;
             for (std::size_t i = 1; i < cdg.tx_counts.size(); ++i) {
                 lo = std::min(lo, cdg.tx_counts[i]);
                 hi = std::max(hi, cdg.tx_counts[i]);
             }
             const auto hybrid = hybrid_collect(net, x, phi);
             const auto conventional = conventional_collect(net, x);
             TrialOutput out;
             out.n = n;
             out.m = m;
             out.add("min_node_tx", static_cast<double>(lo));
             out.add("max_node_tx", static_cast<double>(hi));
             out.add("root_error", (cdg.y - phi * x).cwiseAbs().maxCoeff());
             out.add("cdg_cost", static_cast<double>(cdg.total_tx()));
             out.add("hybrid_cost", static_cast<double>(hybrid.total_tx()));
             out.add("conventional_cost", static_cast<double>(conventional.total_tx()));
             return out;
         }});

    reg.push_back({"transport", "data gathering cost",
                   "conventional, CDG and CDG+SRP transport cost on grids with fitted growth exponents",
                   {text("sizes", "64 144 256", "space-separated network sizes (at least three)"),
                    integer("k", "5", "sparsity for m = k log(n/k)"), integer("s", "4", "SRP sparsity")},
                   [](const ParamSet& p, std::uint64_t seed) {
                       std::vector<Index> ns;
                       std::istringstream in(p.text("sizes"));
                       for (Index v; in >> v;) ns.push_back(v);
                       require(in.eof(), "transport: sizes must be integers");
                       const Index k = p.integer("k");
                       const auto s = static_cast<int>(p.integer("s"));
                       const auto rep = transport_cost_report(ns, k, s, {seed});
                       TrialOutput out;
                       out.k = k;
                       out.s = s;
                       out.add("conventional_exponent", rep.conventional_exponent);
                       out.add("cdg_exponent", rep.cdg_exponent);
                       out.add("cdg_srp_exponent", rep.cdg_srp_exponent);
                       for (const auto& row : rep.rows) {
                           const std::string tag = "_n" + std::to_string(row.n);
                           out.add("conventional" + tag, row.conventional);
                           out.add("cdg" + tag, row.cdg);
                           out.add("cdg_over_nm" + tag, row.cdg / static_cast<double>(row.n * row.m));
                           out.add("cdg_srp" + tag, row.cdg_srp);
                       }
                       return out;
                   }});

    reg.push_back(
        {"srp", "sparse random projections", "sparse random projections stored at random holders",
         {integer("n", "256", "sensors"), integer("m", "80", "measurements"), integer("k", "4", "signal sparsity"),
          integer("s", "4", "measurement sparsity")},
         [](const ParamSet& p, std::uint64_t seed) {
             const Index n = p.integer("n"), m = p.integer("m"), k = p.integer("k");
             const auto s = static_cast<int>(p.integer("s"));
             const auto net = build_network(n, Topology::Grid, derive_seed(seed, {0}));
             Rng rng(derive_seed(seed, {1}));
             const Vector x = planted(n, k, rng);
             const auto run = srp_run(net, x, s, m, derive_seed(seed, {2}));
             const Vector norms = column_norms(run.phi);
             const auto r = omp(normalize_columns(run.phi), run.y, 0.0, static_cast<int>(k));
             Vector est = Vector::Zero(n);
             for (Index j = 0; j < n; ++j)
                 if (norms(j) > 0.0) est(j) = r.estimate(j) / norms(j);
             TrialOutput out;
             out.n = n;
             out.m = m;
             out.k = k;
             out.s = s;
             out.add("support_exact", flag(support_of(est, 1e-6) == support_of(x)));
             out.add("dissemination_messages", static_cast<double>(run.cost.dissemination_messages));
             out.add("dissemination_ratio",
                     static_cast<double>(run.cost.dissemination_messages) / static_cast<double>(n * m));
             out.add("dissemination_tx", static_cast<double>(run.cost.dissemination_tx));
             out.add("query_tx", static_cast<double>(run.cost.query_tx));
             return out;
         }});

    reg.push_back(
        {"dcs", "distributed compressed sensing", "joint recovery of JSM ensembles from per-sensor measurements",
         {text("model", "jsm2", "jsm1 | jsm2 | jsm3"), integer("n", "64", "signal length"),
          integer("sensors", "8", "sensor count"), integer("k0", "0", "common sparsity (jsm1)"),
          integer("k", "4", "innovation sparsity"), integer("m", "12", "measurements per sensor")},
         [](const ParamSet& p, std::uint64_t seed) {
             const JsmModel model = parse_jsm_model(p.text("model"));
             const Index n = p.integer("n"), j = p.integer("sensors"), m = p.integer("m");
             const Index k0 = p.integer("k0"), k = p.integer("k");
             const Matrix psi = Matrix::Identity(n, n);
             const auto e = dcs_synthesize(model, n, j, k0, k, derive_seed(seed, {0}), psi);
             std::vector<Matrix> phis;
             std::vector<Vector> ys;
             for (Index s = 0; s < j; ++s) {
                 phis.push_back(gen_sensing_matrix(Recipe::Gaussian, m, n, derive_seed(seed, {1, static_cast<std::uint64_t>(s)})).entries);
                 ys.push_back(phis.back() * e.signals.col(s));
             }
             DcsParams dp;
             dp.k0 = k0;
             dp.k = k;
             const auto est = dcs_recover(model, ys, phis, psi, dp);
             TrialOutput out;
             out.n = n;
             out.m = m;
             out.k = k;
             out.add("relative_error", (est.estimate.signals - e.signals).norm() / e.signals.norm());
             out.add("converged", flag(est.converged));
             return out;
         }});

    reg.push_back(
        {"anomaly", "anomaly detection", "smooth field plus sparse spikes split over [psi | I]",
         {integer("n", "128", "sensors"), integer("k0", "4", "smooth sparsity in dft_real"),
          integer("k1", "3", "spike count"), integer("m", "0", "measurements (0 selects 4 (k0 + k1) log n)")},
         [](const ParamSet& p, std::uint64_t seed) {
             const Index n = p.integer("n"), k0 = p.integer("k0"), k1 = p.integer("k1");
             Index m = p.integer("m");
             if (m <= 0) m = anomaly_measurements(n, k0, k1);
             const Matrix psi = dft_real_basis(n).entries;
             Rng rng(derive_seed(seed, {0}));
             const Vector smooth = psi * planted(n, k0, rng);
             Vector spikes = Vector::Zero(n);
             const Support truth = sorted_support(rng.choose(n, k1));
             for (Index i : truth) spikes(i) = rng.sign() * rng.uniform(2.0, 4.0);
             const Vector x = smooth + spikes;
             const Matrix phi = gen_sensing_matrix(Recipe::Gaussian, m, n, derive_seed(seed, {1})).entries;
             const auto r = recover_anomalous(phi * x, phi, psi);
             TrialOutput out;
             out.n = n;
             out.m = m;
             out.k = k0 + k1;
             out.add("spikes_exact", flag(r.spikes == truth));
             out.add("relative_error", relative_error(r.x0 + r.x1, x));
             return out;
         }});

    reg.push_back(
        {"link-monitoring", "network tomography", "sparse congested-link recovery over random expander routing",
         {integer("paths", "20", "measured paths"), integer("links", "12", "links (at most 24)"),
          integer("degree", "4", "paths per link"), integer("congested", "1", "congested links"),
          text("solver", "omp", "omp | cosamp | lasso")},
         [](const ParamSet& p, std::uint64_t seed) {
             const Index paths = p.integer("paths"), links = p.integer("links"), k = p.integer("congested");
             const auto routing =
                 random_routing(paths, links, static_cast<int>(p.integer("degree")), derive_seed(seed, {0}));
             Rng rng(derive_seed(seed, {1}));
             Vector x = Vector::Zero(links);
             for (auto i : rng.choose(links, k)) x(i) = rng.uniform(1.0, 2.0);
             const auto r = monitor_links(routing, routing.entries * x, solver_from(p.text("solver"), static_cast<int>(k)));
             TrialOutput out;
             out.n = links;
             out.m = paths;
             out.k = k;
             out.add("support_exact", flag(support_of(r.estimate, 1e-6) == support_of(x)));
             out.add("relative_error", relative_error(r.estimate, x));
             out.add("expander", flag(expander_check(routing, static_cast<int>(std::max<Index>(k, 1)), 0.25).expander));
             return out;
         }});

    reg.push_back({"path-monitoring", "end-to-end path monitoring",
                   "mean path delay tracked from a few path measurements per step",
                   {integer("paths", "30", "monitored paths"), integer("per_step", "3", "measurements per step"),
                    integer("steps", "50", "time steps"), real("drift", "0.1", "relative delay oscillation")},
                   [](const ParamSet& p, std::uint64_t seed) {
                       PathMonitoringParams pm;
                       pm.n_paths = p.integer("paths");
                       pm.per_step = p.integer("per_step");
                       pm.steps = static_cast<int>(p.integer("steps"));
                       pm.drift = p.real("drift");
                       const auto run = path_monitoring_case_study(pm, seed);
                       TrialOutput out;
                       out.n = pm.n_paths;
                       out.m = pm.per_step;
                       out.add("mean_relative_error", run.mean_relative_error);
                       out.add("max_relative_error",
                               *std::max_element(run.relative_error.begin(), run.relative_error.end()));
                       return out;
                   }});

    reg.push_back(
        {"sketch", "traffic sketching", "heavy-hitter recovery from a linear stream sketch",
         {integer("keys", "256", "key universe"), integer("m", "40", "sketch length"),
          integer("heavy", "3", "distinct keys in the stream")},
         [](const ParamSet& p, std::uint64_t seed) {
             const Index keys = p.integer("keys"), m = p.integer("m"), heavy = p.integer("heavy");
             auto sk = make_sketch(m, keys, derive_seed(seed, {0}));
             Rng rng(derive_seed(seed, {1}));
             std::vector<std::pair<Index, double>> truth;
             for (auto key : rng.choose(keys, heavy)) truth.emplace_back(key, static_cast<double>(20 + rng.below(41)));
             std::sort(truth.begin(), truth.end());
             std::vector<Index> stream;
             for (const auto& [key, count] : truth)
                 for (int c = 0; c < static_cast<int>(count); ++c) stream.push_back(key);
             rng.shuffle(stream.begin(), stream.end());
             for (Index key : stream) sketch_update(sk, key);
             const auto got = sketch_recover(sk, static_cast<int>(heavy));
             bool keys_exact = got.size() == truth.size();
             double worst = 0.0;
             for (std::size_t i = 0; keys_exact && i < got.size(); ++i) {
                 keys_exact = got[i].first == truth[i].first;
                 worst = std::max(worst, std::abs(got[i].second - truth[i].second));
             }
             TrialOutput out;
             out.n = keys;
             out.m = m;
             out.k = heavy;
             out.add("heavy_exact", flag(keys_exact));
             out.add("max_count_error", keys_exact ? worst : std::nan(""));
             return out;
         }});

    reg.push_back(
        {"srmf", "traffic matrix completion", "SRSVD, SRMF and their KNN hybrids on planted diurnal traffic",
         {integer("flows", "40", "flows"), integer("times", "96", "time slots"), integer("rank", "3", "planted rank"),
          real("period", "24", "diurnal period in slots"), real("noise", "0.05", "relative noise"),
          text("pattern", "random", "random | row-outage | column-outage"), real("missing", "0.8", "missing fraction"),
          integer("r", "8", "factor rank"), real("lambda", "0.0025", "regularization"),
          integer("K", "5", "spatial neighbours"), integer("window", "3", "KNN window")},
         [](const ParamSet& p, std::uint64_t seed) {
             TmCompareParams c;
             c.n_flows = p.integer("flows");
             c.m_times = p.integer("times");
             c.rank = p.integer("rank");
             c.period = p.real("period");
             c.noise = p.real("noise");
             c.pattern = parse_mask_pattern(p.text("pattern"));
             c.missing = p.real("missing");
             c.r = p.integer("r");
             c.lambda = p.real("lambda");
             c.K = p.integer("K");
             c.window = static_cast<int>(p.integer("window"));
             const auto res = compare_interpolators(c, seed);
             TrialOutput out;
             out.n = c.n_flows;
             out.m = c.m_times;
             out.k = c.r;
             out.add("nmae_srsvd", res.srsvd);
             out.add("nmae_srmf", res.srmf);
             out.add("nmae_srsvd_knn", res.srsvd_knn);
             out.add("nmae_srmf_knn", res.srmf_knn);
             out.add("srmf_wins", flag(res.srmf < res.srsvd));
             out.add("srmf_knn_wins", flag(res.srmf_knn < res.srsvd_knn));
             return out;
         }});

    reg.push_back({"aic", "analog-to-information conversion", "random demodulator on planted on-grid tones",
                   {integer("n", "256", "Nyquist grid"), integer("m", "43", "low-rate samples"),
                    integer("tones", "2", "planted tones"), text("solver", "omp", "omp | cosamp | lasso")},
                   [](const ParamSet& p, std::uint64_t seed) {
                       const Index n = p.integer("n"), m = p.integer("m"), tones = p.integer("tones");
                       const auto sig = make_tones(n, tones, derive_seed(seed, {0}));
                       const auto cfg = make_aic_config(n, m, derive_seed(seed, {1}));
                       const auto est = aic_recover(cfg, aic_sample(cfg, sig.values), dft_real_basis(n),
                                                    solver_from(p.text("solver"), static_cast<int>(2 * tones)));
                       const Support bins = frequency_support(sig.coefficients);
                       const bool exact = frequency_support(est.coefficients) == bins;
                       double worst = 0.0;
                       for (Index b : bins)
                           worst = std::max(worst, std::abs(tone_amplitude(est.coefficients, b) /
                                                                tone_amplitude(sig.coefficients, b) -
                                                            1.0));
                       TrialOutput out;
                       out.n = n;
                       out.m = m;
                       out.k = tones;
                       out.add("support_exact", flag(exact));
                       out.add("amplitude_error", exact ? worst : std::nan(""));
                       return out;
                   }});

    reg.push_back({"spectrum", "spectrum sensing", "band occupancy from randomly subsampled wideband signals",
                   {integer("n", "256", "Nyquist samples"), integer("bands", "32", "bands"),
                    integer("occupied", "3", "occupied bands"), real("ratio", "0.5", "sampling ratio")},
                   [](const ParamSet& p, std::uint64_t seed) {
                       const Index n = p.integer("n"), bands = p.integer("bands");
                       const auto sig = make_band_signal(n, bands, p.integer("occupied"), derive_seed(seed, {0}));
                       const auto rep = spectrum_sense(sig.x, p.real("ratio"), derive_seed(seed, {1}), lasso(1e-3), bands);
                       TrialOutput out;
                       out.n = n;
                       out.m = static_cast<Index>(rep.sampled.size());
                       out.k = p.integer("occupied");
                       out.add("occupancy_exact", flag(rep.occupancy == sig.occupancy));
                       out.add("flagged", flag(!rep.warnings.empty()));
                       return out;
                   }});

    reg.push_back({"consensus", "cooperative sensing", "average consensus with Metropolis weights",
                   {integer("nodes", "8", "cognitive radios"), text("graph", "random", "random | path | ring | star | complete"),
                    real("p", "0.5", "edge probability for random graphs"), integer("bands", "32", "columns of U"),
                    real("tol", "1e-6", "distance to the column mean"), integer("max_iter", "1000", "iteration cap")},
                   [](const ParamSet& p, std::uint64_t seed) {
                       const Index j = p.integer("nodes");
                       const std::string& g = p.text("graph");
                       Matrix adj;
                       if (g == "random") adj = random_connected_graph(j, p.real("p"), derive_seed(seed, {0}));
                       else if (g == "path") adj = path_graph(j);
                       else if (g == "ring") adj = ring_graph(j);
                       else if (g == "star") adj = star_graph(j);
                       else if (g == "complete") adj = complete_graph(j);
                       else fail(ErrorKind::InvalidParameter, "unknown graph '" + g + "'");
                       Rng rng(derive_seed(seed, {1}));
                       Matrix u0(j, p.integer("bands"));
                       for (Index r = 0; r < u0.rows(); ++r)
                           for (Index c = 0; c < u0.cols(); ++c) u0(r, c) = flag(rng.bernoulli(0.5));
                       const auto t = consensus_until(u0, adj, p.real("tol"), static_cast<int>(p.integer("max_iter")));
                       TrialOutput out;
                       out.n = j;
                       out.add("iterations", t.iterations);
                       out.add("converged", flag(t.converged));
                       out.add("sum_drift", (t.u.colwise().sum() - u0.colwise().sum()).cwiseAbs().maxCoeff());
                       return out;
                   }});

    reg.push_back({"uwb", "ultra-wideband echoes", "echo delays over a shift dictionary from gaussian measurements",
                   {integer("n", "512", "Nyquist samples"), real("rate", "0.1", "measurements per sample"),
                    integer("echoes", "3", "planted echoes"), real("sigma", "2", "pulse width parameter")},
                   [](const ParamSet& p, std::uint64_t seed) {
                       const Index n = p.integer("n"), k = p.integer("echoes");
                       const Vector pulse = mexican_hat(p.real("sigma"));
                       const auto e = make_echoes(n, k, pulse.size(), derive_seed(seed, {0}));
                       UwbParams u;
                       u.rate = p.real("rate");
                       u.seed = derive_seed(seed, {1});
                       const auto got = uwb_detect(pulse, uwb_waveform(pulse, e, n), static_cast<int>(k), u, SolverParams{});
                       const bool exact = got.delays == e.delays;
                       double worst = 0.0;
                       for (std::size_t i = 0; exact && i < e.delays.size(); ++i)
                           worst = std::max(worst, std::abs(got.amplitudes[i] / e.amplitudes[i] - 1.0));
                       TrialOutput out;
                       out.n = n;
                       out.m = static_cast<Index>(std::floor(u.rate * static_cast<double>(n)));
                       out.k = k;
                       out.add("delays_exact", flag(exact));
                       out.add("amplitude_error", exact ? worst : std::nan(""));
                       return out;
                   }});

    reg.push_back({"mimo", "MIMO channel estimation", "sparse virtual channel from random training",
                   {integer("receive", "4", "angles of arrival"), integer("transmit", "4", "angles of departure"),
                    integer("delays", "16", "delay bins"), integer("doppler", "0", "Doppler half-width"),
                    integer("d", "4", "nonzero coefficients"), integer("m_train", "45", "training measurements"),
                    text("solver", "omp", "omp | cosamp | lasso"), text("generator", "planted", "planted | physical")},
                   [](const ParamSet& p, std::uint64_t seed) {
                       const VirtualDims dims{p.integer("receive"), p.integer("transmit"), p.integer("delays"),
                                              p.integer("doppler")};
                       const Index d = p.integer("d");
                       const std::string& gen = p.text("generator");
                       VirtualChannel c;
                       if (gen == "planted") c = planted_channel(dims, d, derive_seed(seed, {0}));
                       else if (gen == "physical") c = binned_physical_channel(dims, d, derive_seed(seed, {0}));
                       else fail(ErrorKind::InvalidParameter, "unknown generator '" + gen + "'");
                       const Index m = p.integer("m_train");
                       const auto est = mimo_estimate(c, m, derive_seed(seed, {1}),
                                                      solver_from(p.text("solver"), static_cast<int>(c.nonzeros())));
                       TrialOutput out;
                       out.n = dims.size();
                       out.m = m;
                       out.k = c.nonzeros();
                       out.add("support_exact", flag(support_of(est.channel.h, 1e-6) == support_of(c.h)));
                       out.add("relative_error", relative_error(est.channel.h, c.h));
                       return out;
                   }});

    reg.push_back(
        {"erasure", "erasure coding", "decoding from the measurements that survive erasure",
         {integer("n", "128", "signal length"), integer("l", "64", "transmitted measurements"),
          integer("e", "0", "erased measurements"), text("signal", "power-law", "sparse | power-law"),
          integer("k", "4", "sparsity for sparse signals"), real("alpha", "1", "power-law decay"),
          real("lambda_ratio", "0.01", "lambda relative to ||A^T y||_inf")},
         [](const ParamSet& p, std::uint64_t seed) {
             const Index n = p.integer("n"), l = p.integer("l"), e = p.integer("e");
             const Matrix psi = dft_real_basis(n).entries;
             const std::string& kind = p.text("signal");
             Vector coef;
             SolverParams sp;
             if (kind == "sparse") {
                 Rng rng(derive_seed(seed, {0}));
                 coef = planted(n, p.integer("k"), rng);
                 sp = lasso(1e-3);
             } else if (kind == "power-law") {
                 coef = power_law_coefficients(n, p.real("alpha"), derive_seed(seed, {0}));
                 sp.kind = SolverKind::Lasso;
                 sp.lambda_ratio = p.real("lambda_ratio");
                 sp.max_iter = 5000;
             } else {
                 fail(ErrorKind::InvalidParameter, "unknown signal '" + kind + "'");
             }
             const Vector x = psi * coef;
             const auto code = erasure_encode(x, l, derive_seed(seed, {1}));
             std::vector<Index> order(static_cast<std::size_t>(l));
             std::iota(order.begin(), order.end(), Index{0});
             Rng rng(derive_seed(seed, {2}));
             rng.shuffle(order.begin(), order.end());
             const auto ch = erase_prefix(order, e);
             Vector yk(static_cast<Index>(ch.kept.size()));
             for (std::size_t i = 0; i < ch.kept.size(); ++i) yk(static_cast<Index>(i)) = code.y(ch.kept[i]);
             const Vector est = erasure_decode(yk, ch.kept, code.phi.entries, psi, sp);
             TrialOutput out;
             out.n = n;
             out.m = static_cast<Index>(ch.kept.size());
             if (kind == "sparse") out.k = p.integer("k");
             out.add("relative_error", relative_error(est, x));
             return out;
         }});

    reg.push_back({"random-access", "multiple access", "on-off random access detection against the matched filter",
                   {integer("n", "128", "codeword length"), integer("users", "512", "user population"),
                    real("active", "8", "expected active users"), real("snr", "10", "per-user SNR (linear)"),
                    real("mu", "0", "sparsity weight (0 selects the noise-based default)")},
                   [](const ParamSet& p, std::uint64_t seed) {
                       const Index n = p.integer("n"), users = p.integer("users");
                       const double snr = p.real("snr");
                       const auto slot = make_access_slot(n, users, p.real("active") / static_cast<double>(users), snr, seed);
                       const auto cs = random_access_detect(slot.y, slot.codebook, p.real("mu"), snr);
                       TrialOutput out;
                       out.n = users;
                       out.m = n;
                       out.k = static_cast<Index>(slot.active.size());
                       out.add("cs_exact", flag(cs.active == slot.active));
                       out.add("mf_exact", flag(matched_filter_detect(slot.y, slot.codebook) == slot.active));
                       return out;
                   }});

    return reg;
}

}  // namespace

const std::vector<Scenario>& scenario_registry() {
    static const std::vector<Scenario> registry = build_registry();
    return registry;
}

}  // namespace csnet

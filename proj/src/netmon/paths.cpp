#include "csnet/netmon/paths.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/linalg.hpp"
#include "csnet/core/rng.hpp"
#include "csnet/solvers/ista.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

namespace csnet {

namespace {

bool connected(const Matrix& w) {
    const Index n = w.rows();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<Index> queue{0};
    seen[0] = 1;
    Index reached = 1;
    while (!queue.empty()) {
        const Index u = queue.front();
        queue.pop_front();
        for (Index v = 0; v < n; ++v) {
            if (w(u, v) > 0.0 && !seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    return reached == n;
}

}  // namespace

MeasurementGraph measurement_graph(const std::vector<LinkSet>& paths) {
    const Index n = static_cast<Index>(paths.size());
    require(n >= 1, "measurement_graph: no paths");
    std::vector<LinkSet> sets = paths;
    for (auto& s : sets) {
        require(!s.empty(), "measurement_graph: empty path");
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    MeasurementGraph g;
    g.weights = Matrix::Identity(n, n);
    LinkSet common;
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            const auto& a = sets[static_cast<std::size_t>(i)];
            const auto& b = sets[static_cast<std::size_t>(j)];
            common.clear();
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            const double shared = static_cast<double>(common.size());
            const double w = shared / (static_cast<double>(a.size() + b.size()) - shared);
            g.weights(i, j) = w;
            g.weights(j, i) = w;
        }
    }
    return g;
}

BasisMatrix graph_basis(const MeasurementGraph& graph) {
    const Index n = graph.size();
    require(n >= 1 && graph.weights.cols() == n, "graph_basis: weights must be square");
    Matrix w = graph.weights;
    w.diagonal().setZero();

    require(connected(w), "graph_basis: measurement graph is disconnected");

    Matrix laplacian = -w;
    laplacian.diagonal() = w.rowwise().sum();
    Eigen::SelfAdjointEigenSolver<Matrix> eig(laplacian);
    BasisMatrix b;
    b.kind = BasisKind::GraphEigen;
    b.entries = eig.eigenvectors();
    b.spectrum = eig.eigenvalues();
    for (Index c = 0; c < n; ++c) {
        Index pivot = 0;
        const double peak = b.entries.col(c).cwiseAbs().maxCoeff();
        while (std::abs(b.entries(pivot, c)) < peak * (1.0 - 1e-9)) ++pivot;
        if (b.entries(pivot, c) < 0.0) b.entries.col(c) *= -1.0;
    }
    return b;
}

Support select_paths(Index n_paths, Index count, std::uint64_t seed) {
    require(count >= 1 && count <= n_paths, "select_paths: need 1 <= count <= paths");
    Rng rng(seed);
    const auto draw = rng.choose(n_paths, count);
    Support s(draw.begin(), draw.end());
    std::sort(s.begin(), s.end());
    return s;
}

Vector monitor_paths(const Vector& y_s, const Support& selected, const BasisMatrix& basis, double lambda,
                     bool debias) {
    require(!selected.empty(), "monitor_paths: empty selection");
    require(static_cast<Index>(selected.size()) == y_s.size(), "monitor_paths: one value per selected path");
    Support sorted = selected;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "monitor_paths: duplicate selection");
    for (Index i : selected)
        require(i >= 0 && i < basis.dimension(), "monitor_paths: selected index out of range");

    const Matrix ab = select_rows(basis.entries, selected);
    if (lambda <= 0.0) {
        const double scale = (ab.transpose() * y_s).cwiseAbs().maxCoeff();
        if (scale == 0.0) return Vector::Zero(basis.dimension());
        lambda = 1e-3 * scale;
    }
    auto r = ista_lasso(ab, y_s, lambda, 20000, 1e-12);
    Vector beta = r.estimate;
    if (debias && !r.support.empty() && static_cast<Index>(r.support.size()) <= ab.rows()) {
        const Vector fit = least_squares(select_columns(ab, r.support), y_s);
        beta.setZero();
        for (std::size_t t = 0; t < r.support.size(); ++t) beta(r.support[t]) = fit(static_cast<Index>(t));
    }
    return basis.entries * beta;
}

LinkTopology backbone_topology() {
    static const std::vector<std::pair<int, int>> edges = {
        {0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 5}, {3, 4}, {4, 5}, {4, 7},
        {5, 8}, {6, 7}, {7, 8}, {6, 10}, {8, 9}, {9, 10}, {6, 9},
    };
    LinkTopology t;
    t.nodes = 11;
    for (const auto& [a, b] : edges) {
        t.links.emplace_back(a, b);
        t.links.emplace_back(b, a);
    }
    return t;
}

LinkSet shortest_route(const LinkTopology& topology, int from, int to) {
    const Index n = topology.nodes;
    require(from >= 0 && from < n && to >= 0 && to < n && from != to, "shortest_route: bad endpoints");
    std::vector<int> via(static_cast<std::size_t>(n), -1);
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::deque<int> queue{from};
    dist[static_cast<std::size_t>(from)] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (std::size_t l = 0; l < topology.links.size(); ++l) {
            const auto [a, b] = topology.links[l];
            if (a != u || dist[static_cast<std::size_t>(b)] >= 0) continue;
            dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(u)] + 1;
            via[static_cast<std::size_t>(b)] = static_cast<int>(l);
            queue.push_back(b);
        }
    }
    require(dist[static_cast<std::size_t>(to)] >= 0, "shortest_route: destination unreachable");
    LinkSet route;
    for (int v = to; v != from; v = topology.links[static_cast<std::size_t>(via[static_cast<std::size_t>(v)])].first)
        route.push_back(via[static_cast<std::size_t>(v)]);
    std::reverse(route.begin(), route.end());
    return route;
}

PathMonitoringRun path_monitoring_case_study(const PathMonitoringParams& params, std::uint64_t seed) {
    const LinkTopology topo = backbone_topology();
    const Index pairs = topo.nodes * (topo.nodes - 1);
    require(params.n_paths >= 1 && params.n_paths <= pairs, "path_monitoring_case_study: too many paths");
    require(params.per_step >= 1 && params.per_step <= params.n_paths, "path_monitoring_case_study: bad per-step count");
    require(params.steps >= 1, "path_monitoring_case_study: need at least one step");

    // Redraw the path set until its measurement graph is connected.
    std::vector<LinkSet> routes;
    std::uint64_t attempt = 0;
    for (;; ++attempt) {
        require(attempt < 100, "path_monitoring_case_study: no connected path set found");
        Rng draw(derive_seed(seed, {0, attempt}));
        routes.clear();
        for (auto code : draw.choose(pairs, params.n_paths)) {
            const int from = static_cast<int>(code / (topo.nodes - 1));
            int to = static_cast<int>(code % (topo.nodes - 1));
            if (to >= from) ++to;
            routes.push_back(shortest_route(topo, from, to));
        }
        Matrix w = measurement_graph(routes).weights;
        w.diagonal().setZero();
        if (connected(w)) break;
    }
    Rng rng(derive_seed(seed, {2}));
    const Index n_links = static_cast<Index>(topo.links.size());
    const RoutingMatrix routing = build_routing(routes, n_links);
    const BasisMatrix basis = graph_basis(measurement_graph(routes));

    Vector base(n_links), phase(n_links);
    for (Index l = 0; l < n_links; ++l) {
        base(l) = rng.uniform(2.0, 10.0);
        phase(l) = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }

    PathMonitoringRun run;
    std::vector<char> known(static_cast<std::size_t>(params.n_paths), 0);
    Vector latest = Vector::Zero(params.n_paths);
    for (int t = 0; t < params.steps; ++t) {
        const Vector link_delay =
            (base.array() * (1.0 + params.drift * (2.0 * std::numbers::pi * t / 25.0 + phase.array()).sin())).matrix();
        const Vector y = routing.entries * link_delay;
        for (Index p : select_paths(params.n_paths, params.per_step, derive_seed(seed, {1, static_cast<std::uint64_t>(t)}))) {
            known[static_cast<std::size_t>(p)] = 1;
            latest(p) = y(p);
        }
        Support selected;
        for (Index p = 0; p < params.n_paths; ++p)
            if (known[static_cast<std::size_t>(p)]) selected.push_back(p);
        const Vector y_hat = monitor_paths(select_rows(latest, selected), selected, basis, params.lambda);
        const double truth = y.mean();
        const double estimate = y_hat.mean();
        run.true_mean.push_back(truth);
        run.estimated_mean.push_back(estimate);
        run.relative_error.push_back(std::abs(estimate - truth) / truth);
    }
    double total = 0.0;
    for (double e : run.relative_error) total += e;
    run.mean_relative_error = total / static_cast<double>(run.relative_error.size());
    return run;
}

}  // namespace csnet

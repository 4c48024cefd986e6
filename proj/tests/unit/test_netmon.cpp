#include "csnet/core/error.hpp"
#include "csnet/core/rng.hpp"
#include "csnet/core/sensing.hpp"
#include "csnet/netmon/paths.hpp"
#include "csnet/netmon/routing.hpp"
#include "csnet/netmon/sketch.hpp"
#include "csnet/solvers/l0_oracle.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

using namespace csnet;

namespace {

// Independent expansion test: walks every link subset as a bitmask.
bool expander_by_masks(const Matrix& routing, int s, double eps) {
    const int links = static_cast<int>(routing.cols());
    const Vector deg = routing.colwise().sum();
    for (int j = 1; j < links; ++j)
        if (deg(j) != deg(0)) return false;
    for (std::uint32_t mask = 1; mask < (1u << links); ++mask) {
        const int size = std::popcount(mask);
        if (size > s) continue;
        int reached = 0;
        for (Index i = 0; i < routing.rows(); ++i) {
            bool hit = false;
            for (int j = 0; j < links; ++j)
                if ((mask >> j & 1u) && routing(i, j) != 0.0) hit = true;
            reached += hit;
        }
        if (reached < (1.0 - eps) * deg(0) * size - 1e-9) return false;
    }
    return true;
}

RoutingMatrix find_expander(Index paths, Index links, int d, int s, double eps) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        auto r = random_routing(paths, links, d, seed);
        if (expander_check(r, s, eps).expander) return r;
    }
    ADD_FAILURE() << "no expander found";
    return {};
}

}  // namespace

TEST(Routing, Definition) {
    const auto r = build_routing({{0, 1}, {1, 2}}, 3);
    Matrix expected(2, 3);
    expected << 1, 1, 0, 0, 1, 1;
    EXPECT_EQ(r.entries, expected);
    EXPECT_TRUE(build_routing({{0, 1, 2, 3}}, 4).entries.isOnes());
    EXPECT_THROW(build_routing({{0}, {}}, 3), Error);
    EXPECT_THROW(build_routing({{0, 3}}, 3), Error);
}

TEST(Routing, PathDelaysAreLinkSums) {
    const auto r = build_routing({{0, 1}, {1, 2, 3}, {3, 4}, {0, 4}}, 5);
    const Vector x = (Vector(5) << 1, 2, 3, 4, 5).finished();
    const Vector y = r.entries * x;
    EXPECT_EQ(y, (Vector(4) << 3, 9, 9, 6).finished());
}

TEST(Expander, DisjointNeighbourhoodsPassWithZeroError) {
    std::vector<LinkSet> paths(8);
    for (int j = 0; j < 4; ++j) {
        paths[static_cast<std::size_t>(2 * j)].push_back(j);
        paths[static_cast<std::size_t>(2 * j + 1)].push_back(j);
    }
    const auto rep = expander_check(build_routing(paths, 4), 4, 0.0);
    EXPECT_TRUE(rep.expander);
    EXPECT_EQ(rep.degree, 2);
}

TEST(Expander, SharedNeighbourhoodFailsWithWitness) {
    const auto r = build_routing({{0, 1, 2}, {0, 1, 2}}, 3);
    const auto rep = expander_check(r, 2, 0.25);
    EXPECT_FALSE(rep.expander);
    EXPECT_EQ(rep.witness.size(), 2u);
}

TEST(Expander, IrregularGraphReported) {
    const auto rep = expander_check(build_routing({{0, 1}, {1}}, 2), 2, 0.25);
    EXPECT_FALSE(rep.expander);
    EXPECT_EQ(rep.degree, 0);
    EXPECT_NE(rep.reason.find("left-regular"), std::string::npos);
}

TEST(Expander, TooManyLinksIsAResourceLimit) {
    EXPECT_THROW(expander_check(random_routing(30, 25, 2, 1), 2, 0.25), Error);
}

TEST(Expander, AgreesWithMaskEnumeration) {
    int passes = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto r = random_routing(24, 12, 4, seed);
        const bool verdict = expander_check(r, 2, 0.25).expander;
        EXPECT_EQ(verdict, expander_by_masks(r.entries, 2, 0.25)) << "seed " << seed;
        passes += verdict;
    }
    EXPECT_GT(passes, 0);
    EXPECT_LT(passes, 100);
}

TEST(MonitorLinks, SingleCongestedLinkIsExact) {
    const auto r = find_expander(20, 12, 4, 2, 0.25);
    SolverParams lasso;
    lasso.kind = SolverKind::Lasso;
    lasso.lambda_ratio = 1e-4;
    lasso.debias = true;
    SolverParams greedy;
    greedy.k = 1;
    for (Index j = 0; j < 12; ++j) {
        Vector x = Vector::Zero(12);
        x(j) = 7.5;
        const Vector y = r.entries * x;
        for (const auto& p : {lasso, greedy}) {
            const auto est = monitor_links(r, y, p);
            EXPECT_EQ(est.support, Support({j}));
            EXPECT_NEAR(est.estimate(j), 7.5, 1e-8);
        }
    }
}

TEST(MonitorLinks, ZeroDelays) {
    const auto r = random_routing(8, 6, 2, 3);
    SolverParams p;
    p.kind = SolverKind::Lasso;
    EXPECT_TRUE(monitor_links(r, Vector::Zero(8), p).estimate.isZero());
}

TEST(MonitorLinks, TwoCongestedLinksMatchOracle) {
    int agree = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto r = random_routing(12, 20, 3, seed);
        Rng rng(seed + 100);
        Vector x = Vector::Zero(20);
        for (auto j : rng.choose(20, 2)) x(j) = rng.uniform(5, 10);
        const Vector y = r.entries * x;
        SolverParams p;
        p.k = 2;
        const auto est = monitor_links(r, y, p);
        const auto oracle = l0_oracle(normalize_columns(r.entries), y, 2);
        agree += est.support == oracle.support;
    }
    EXPECT_GE(agree, 18);
}

TEST(MonitorLinks, LossRatesThroughLogTransform) {
    const auto r = find_expander(20, 12, 4, 2, 0.25);
    Vector loss = Vector::Zero(12);
    loss(5) = 0.2;
    Vector y(20);
    for (Index i = 0; i < 20; ++i) {
        double pass = 1.0;
        for (Index j = 0; j < 12; ++j)
            if (r.entries(i, j) != 0.0) pass *= 1.0 - loss(j);
        y(i) = 1.0 - pass;
    }
    SolverParams p;
    p.k = 1;
    const auto est = monitor_links(r, y, p, LinkMetric::LossRate);
    EXPECT_NEAR(est.estimate(5), 0.2, 1e-10);
}

TEST(MeasurementGraph, Weights) {
    const auto g = measurement_graph({{0, 1}, {0, 1}, {1, 2}, {5, 6}});
    EXPECT_DOUBLE_EQ(g.weights(0, 1), 1.0);
    EXPECT_DOUBLE_EQ(g.weights(0, 2), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(g.weights(0, 3), 0.0);
    EXPECT_DOUBLE_EQ(g.weights(3, 3), 1.0);
}

TEST(MeasurementGraph, SymmetricAndBounded) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto r = random_routing(15, 10, 3, seed);
        const auto g = measurement_graph(r.path_link_sets);
        EXPECT_EQ(g.weights, g.weights.transpose());
        EXPECT_GE(g.weights.minCoeff(), 0.0);
        EXPECT_LE(g.weights.maxCoeff(), 1.0);
        EXPECT_TRUE(g.weights.diagonal().isOnes());
    }
}

TEST(GraphBasis, OrthonormalWithConstantFirstColumn) {
    const auto r = random_routing(40, 20, 4, 8);
    const auto b = graph_basis(measurement_graph(r.path_link_sets));
    EXPECT_LT((b.entries.transpose() * b.entries - Matrix::Identity(40, 40)).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((b.entries.col(0).array() - 1.0 / std::sqrt(40.0)).abs().maxCoeff(), 1e-10);
    EXPECT_NEAR(b.spectrum(0), 0.0, 1e-10);
    EXPECT_EQ(b.kind, BasisKind::GraphEigen);
}

TEST(GraphBasis, PathGraphSpectrum) {
    const Index n = 9;
    MeasurementGraph g{Matrix::Identity(n, n)};
    for (Index i = 0; i + 1 < n; ++i) g.weights(i, i + 1) = g.weights(i + 1, i) = 1.0;
    const auto b = graph_basis(g);
    for (Index k = 0; k < n; ++k)
        EXPECT_NEAR(b.spectrum(k), 2.0 - 2.0 * std::cos(std::numbers::pi * static_cast<double>(k) / n), 1e-12);
}

TEST(GraphBasis, DisconnectedGraphRejected) {
    EXPECT_THROW(graph_basis(measurement_graph({{0}, {1}})), Error);
}

TEST(MonitorPaths, FullSelectionReproducesMeasurements) {
    const auto r = random_routing(30, 15, 4, 2);
    const auto b = graph_basis(measurement_graph(r.path_link_sets));
    Rng rng(4);
    const Vector y = Vector::NullaryExpr(30, [&] { return rng.uniform(1, 5); });
    Support all(30);
    std::iota(all.begin(), all.end(), 0);
    for (double lambda : {1e-8, 1e-10}) {
        EXPECT_LT((monitor_paths(y, all, b, lambda, false) - y).cwiseAbs().maxCoeff(), 1e-7);
        EXPECT_LT((monitor_paths(y, all, b, lambda, true) - y).cwiseAbs().maxCoeff(), 1e-9);
    }
    EXPECT_THROW(monitor_paths(Vector(), Support{}, b, 0.0), Error);
    EXPECT_THROW(monitor_paths(Vector::Ones(2), Support{3, 3}, b, 0.0), Error);
}

TEST(MonitorPaths, SmoothMetricFromThirtyPercent) {
    // Paths of three consecutive links on a 50-link ring: a circulant
    // measurement graph whose low-frequency eigenvectors are spread out.
    std::vector<LinkSet> ring;
    for (int i = 0; i < 50; ++i) ring.push_back({i, (i + 1) % 50, (i + 2) % 50});
    const auto b = graph_basis(measurement_graph(ring));
    int ok = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        const Vector coef = Vector::NullaryExpr(3, [&] { return rng.sign() * rng.uniform(1, 2); });
        const Vector y = b.entries.leftCols(3) * coef;
        const Support sel = select_paths(50, 15, seed + 1000);
        Vector ys(15);
        for (Index t = 0; t < 15; ++t) ys(t) = y(sel[static_cast<std::size_t>(t)]);
        const Vector y_hat = monitor_paths(ys, sel, b, 0.0);
        ok += (y_hat - y).norm() / y.norm() < 0.05;
    }
    EXPECT_GE(ok, 9);
}

TEST(MonitorPaths, BackboneCaseStudy) {
    const auto topo = backbone_topology();
    EXPECT_EQ(topo.nodes, 11);
    EXPECT_EQ(topo.links.size(), 30u);
    EXPECT_EQ(shortest_route(topo, 0, 1).size(), 1u);
    const auto run = path_monitoring_case_study(PathMonitoringParams{}, 1);
    EXPECT_EQ(run.relative_error.size(), 50u);
    EXPECT_LT(run.mean_relative_error, 0.10);
}

TEST(Sketch, Linearity) {
    auto a = make_sketch(10, 100, 1);
    auto b = make_sketch(10, 100, 1);
    auto both = make_sketch(10, 100, 1);
    const std::vector<Index> s1{3, 17, 3, 99}, s2{17, 0, 42};
    for (Index k : s1) sketch_update(a, k), sketch_update(both, k);
    for (Index k : s2) sketch_update(b, k), sketch_update(both, k);
    EXPECT_LT((both.y - a.y - b.y).cwiseAbs().maxCoeff(), 1e-12);
    Vector counts = Vector::Zero(100);
    for (Index k : s1) counts(k) += 1;
    for (Index k : s2) counts(k) += 1;
    EXPECT_LT((both.y - both.phi.entries * counts).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_THROW(sketch_update(a, 100), Error);
}

TEST(Sketch, SingleHeavyKey) {
    const Index n = 1000;
    auto s = make_sketch(static_cast<Index>(std::ceil(4 * std::log(n))), n, 7);
    for (int i = 0; i < 7; ++i) sketch_update(s, 321);
    const auto got = sketch_recover(s, 1);
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(got[0].first, 321);
    EXPECT_NEAR(got[0].second, 7.0, 1e-9);
}

TEST(Sketch, ThreeHeavyKeys) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto s = make_sketch(40, 256, seed);
        Rng rng(seed + 9);
        const auto keys = rng.choose(256, 3);
        const int counts[] = {50, 30, 20};
        std::vector<Index> stream;
        for (int t = 0; t < 3; ++t)
            for (int c = 0; c < counts[t]; ++c) stream.push_back(keys[static_cast<std::size_t>(t)]);
        rng.shuffle(stream.begin(), stream.end());
        for (Index k : stream) sketch_update(s, k);
        const auto got = sketch_recover(s, 3);
        ASSERT_EQ(got.size(), 3u);
        for (int t = 0; t < 3; ++t) {
            const auto it = std::find_if(got.begin(), got.end(), [&](const auto& p) { return p.first == keys[static_cast<std::size_t>(t)]; });
            ASSERT_NE(it, got.end());
            EXPECT_NEAR(it->second, counts[t], 1.0);
        }
    }
}

TEST(Sketch, StreamParsing) {
    std::istringstream in("4\n\n 17 \n0\n");
    EXPECT_EQ(read_stream(in), (std::vector<Index>{4, 17, 0}));
    std::istringstream bad("4\nx\n");
    EXPECT_THROW(read_stream(bad), Error);
}

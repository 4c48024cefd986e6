#include "csnet/core/error.hpp"
#include "csnet/core/linalg.hpp"
#include "csnet/core/rng.hpp"
#include "csnet/tmc/srmf.hpp"
#include "csnet/tmc/traffic.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace csnet;

namespace {

Matrix random_matrix(Index n, Index m, std::uint64_t seed) {
    Rng rng(seed);
    return Matrix::NullaryExpr(n, m, [&] { return rng.normal(); });
}

double lag_autocorrelation(const Matrix& x, Index lag) {
    double acc = 0.0;
    for (Index i = 0; i < x.rows(); ++i) {
        const Vector row = x.row(i).transpose().array() - x.row(i).mean();
        const Index len = row.size() - lag;
        acc += row.head(len).dot(row.tail(len)) / row.squaredNorm();
    }
    return acc / static_cast<double>(x.rows());
}

bool nonincreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
    return true;
}

}  // namespace

TEST(Synth, RankOneMinorsVanish) {
    const auto s = synth_tm(6, 20, 1, 8, 0.0, 3);
    for (Index i = 0; i + 1 < 6; ++i)
        for (Index j = 0; j + 1 < 20; ++j)
            EXPECT_NEAR(s.X(i, j) * s.X(i + 1, j + 1) - s.X(i, j + 1) * s.X(i + 1, j), 0.0, 1e-9);
    EXPECT_TRUE(s.mask.isOnes());
}

TEST(Synth, DiurnalAutocorrelation) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto s = synth_tm(20, 96, 3, 24, 0.05, seed);
        EXPECT_GT(lag_autocorrelation(s.X, 24), lag_autocorrelation(s.X, 12));
        EXPECT_GE(s.X.minCoeff(), 0.0);
    }
}

TEST(Synth, NoiselessRankIsExact) {
    for (Index r = 1; r <= 5; ++r) EXPECT_EQ(numerical_rank(synth_tm(30, 60, r, 24, 0.0, r).X, 1e-9), r);
    EXPECT_THROW(synth_tm(3, 10, 4, 24, 0.0, 1), Error);
}

TEST(Masks, PatternsAndCounts) {
    const Matrix r = make_mask(10, 20, MaskPattern::Random, 0.8, 1);
    EXPECT_DOUBLE_EQ(r.sum(), 40.0);
    const Matrix rows = make_mask(10, 20, MaskPattern::RowOutage, 0.3, 1);
    EXPECT_DOUBLE_EQ(rows.sum(), 7 * 20.0);
    for (Index i = 0; i < 10; ++i) EXPECT_TRUE(rows.row(i).isZero() || rows.row(i).isOnes());
    const Matrix cols = make_mask(10, 20, MaskPattern::ColumnOutage, 0.95, 1);
    EXPECT_DOUBLE_EQ(cols.sum(), 10.0);
    EXPECT_EQ(parse_mask_pattern(to_string(MaskPattern::ColumnOutage)), MaskPattern::ColumnOutage);
}

TEST(Toeplitz, SmallCase) {
    Matrix expected(3, 3);
    expected << 1, -1, 0, 0, 1, -1, 0, 0, 1;
    EXPECT_EQ(temporal_T(3), expected);
    EXPECT_THROW(temporal_T(1), Error);
}

TEST(Toeplitz, ClosedFormUpToThousand) {
    for (Index m = 2; m <= 1000; m += (m < 50 ? 1 : 37)) {
        const Matrix t = temporal_T(m);
        for (Index j = 0; j < m; ++j)
            for (Index i = 0; i < m; ++i) {
                const double want = i == j ? 1.0 : (j == i + 1 ? -1.0 : 0.0);
                ASSERT_EQ(t(i, j), want) << m;
            }
    }
}

TEST(Toeplitz, AdjacentDifferences) {
    const Matrix constant = Matrix::Constant(4, 9, 2.5);
    const Matrix d0 = constant * temporal_T(9).transpose();
    EXPECT_TRUE(d0.leftCols(8).isZero());
    EXPECT_EQ(d0.col(8), constant.col(8));

    const Matrix x = random_matrix(5, 12, 4);
    const Matrix d = x * temporal_T(12).transpose();
    for (Index i = 0; i + 1 < 12; ++i) EXPECT_LT((d.col(i) - (x.col(i) - x.col(i + 1))).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Svd, ReconstructionAndTruncation) {
    const Matrix x = random_matrix(8, 11, 5);
    Matrix l, r;
    svd_factors(x, 8, l, r);
    EXPECT_LT((l * r.transpose() - x).cwiseAbs().maxCoeff(), 1e-9);

    svd_factors(x, 3, l, r);
    const Matrix best = l * r.transpose();
    EXPECT_LT((best - truncated_svd(x, 3)).norm(), 1e-9);
    const double err = (x - best).norm();
    Rng rng(6);
    for (int t = 0; t < 100; ++t) {
        const Matrix lp = l + 0.1 * Matrix::NullaryExpr(8, 3, [&] { return rng.normal(); });
        const Matrix rp = r + 0.1 * Matrix::NullaryExpr(11, 3, [&] { return rng.normal(); });
        EXPECT_GE((x - lp * rp.transpose()).norm(), err - 1e-12);
    }
}

TEST(Nmae, Definition) {
    const Matrix truth = (Matrix(1, 2) << 2, 2).finished();
    const Matrix est = (Matrix(1, 2) << 1, 3).finished();
    const Matrix all = Matrix::Ones(1, 2);
    EXPECT_DOUBLE_EQ(nmae(truth, est, all), 0.5);
    EXPECT_DOUBLE_EQ(nmae(truth, truth, all), 0.0);
    EXPECT_DOUBLE_EQ(nmae(truth, Matrix::Zero(1, 2), all), 1.0);
    EXPECT_THROW(nmae(Matrix::Zero(1, 2), est, all), Error);
    EXPECT_THROW(nmae(truth, est, Matrix::Zero(1, 2)), Error);
}

TEST(Baseline, FullMaskKeepsMeasurements) {
    auto s = synth_tm(6, 12, 2, 6, 0.1, 1);
    EXPECT_EQ(baseline_interpolate(s, 2), s.X);
}

TEST(Baseline, EmptyRowTakesBaseRow) {
    auto s = synth_tm(6, 12, 1, 6, 0.0, 2);
    s.mask.row(3).setZero();
    const Matrix base = baseline_fit(s, 1);
    const Matrix filled = baseline_interpolate(s, 1);
    EXPECT_EQ(filled.row(3), base.row(3));
    EXPECT_GT(filled.row(3).cwiseAbs().minCoeff(), 0.0);
}

TEST(Baseline, RankOneHalfObserved) {
    auto s = synth_tm(20, 40, 1, 10, 0.0, 3);
    s.mask = make_mask(20, 40, MaskPattern::Random, 0.5, 4);
    const Matrix filled = baseline_interpolate(s, 1);
    const Matrix missing = Matrix::Ones(20, 40) - s.mask;
    EXPECT_EQ(filled.cwiseProduct(s.mask), s.observed());
    EXPECT_LT(nmae(s.X, filled, missing), 0.10);
    s.mask.setZero();
    EXPECT_THROW(baseline_interpolate(s, 1), Error);
}

TEST(SpatialS, DuplicatedRows) {
    Matrix x = random_matrix(4, 6, 7);
    x.row(2) = x.row(0);
    const Matrix S = spatial_S(x, 1);
    EXPECT_NEAR(S(0, 2), -1.0, 1e-12);
    EXPECT_NEAR(S.row(0).sum(), 0.0, 1e-12);
    EXPECT_NEAR(S.row(2).sum(), 0.0, 1e-12);
    EXPECT_THROW(spatial_S(x, 0), Error);
    EXPECT_THROW(spatial_S(x, 4), Error);
}

TEST(SpatialS, OrthogonalRowGetsZeroWeight) {
    Matrix x(3, 4);
    x << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 5, 0;
    const Matrix S = spatial_S(x, 1);
    EXPECT_DOUBLE_EQ(S(0, 0), 1.0);
    EXPECT_NEAR(S.row(0).sum(), 1.0, 1e-15);
}

TEST(SpatialS, NormalEquationOracle) {
    const Matrix x = random_matrix(6, 8, 8);
    const Matrix S = spatial_S(x, 2);
    for (Index i = 0; i < 6; ++i) {
        std::vector<std::pair<double, Index>> d;
        for (Index j = 0; j < 6; ++j)
            if (j != i) d.emplace_back((x.row(i) - x.row(j)).squaredNorm(), j);
        std::sort(d.begin(), d.end());
        Matrix a(8, 2);
        a.col(0) = x.row(d[0].second).transpose();
        a.col(1) = x.row(d[1].second).transpose();
        const Vector w = (a.transpose() * a).ldlt().solve(a.transpose() * x.row(i).transpose());
        EXPECT_NEAR(S(i, d[0].second), -w(0), 1e-10);
        EXPECT_NEAR(S(i, d[1].second), -w(1), 1e-10);
        EXPECT_DOUBLE_EQ(S(i, i), 1.0);
        EXPECT_EQ((S.row(i).array() != 0.0).count(), 3);
    }
}

TEST(Scaling, TargetIdentities) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Matrix xh = random_matrix(7, 15, seed).cwiseAbs();
        const Matrix b = random_matrix(7, 15, seed + 50);
        const Matrix S = spatial_S(xh, 2);
        const Matrix T = temporal_T(15);
        const double lambda = 0.01 + 0.1 * static_cast<double>(seed);
        const auto sc = scale_constraints(S, T, xh, b, lambda);
        EXPECT_NEAR((sc.S * xh).norm(), 0.1 * std::sqrt(lambda) * b.norm(), 1e-10 * b.norm());
        EXPECT_NEAR((xh * sc.T.transpose()).norm(), std::sqrt(lambda) * b.norm(), 1e-10 * b.norm());
        EXPECT_NEAR((xh * sc.T.transpose()).norm() / (sc.S * xh).norm(), 10.0, 1e-9);
        EXPECT_TRUE(sc.warnings.empty());
        const auto four = scale_constraints(S, T, xh, b, 4 * lambda);
        EXPECT_NEAR((four.S * xh).norm(), 2 * (sc.S * xh).norm(), 1e-9);
        EXPECT_NEAR((xh * four.T.transpose()).norm(), 2 * (xh * sc.T.transpose()).norm(), 1e-9);
    }
}

TEST(Scaling, AnnihilatingConstraintDropped) {
    Matrix xh = random_matrix(4, 6, 1);
    xh.row(1) = xh.row(0);
    xh.row(3) = xh.row(2);
    Matrix S = Matrix::Zero(4, 4);
    S(0, 0) = 1, S(0, 1) = -1, S(2, 2) = 1, S(2, 3) = -1;
    const auto sc = scale_constraints(S, temporal_T(6), xh, xh, 0.1);
    EXPECT_TRUE(sc.S.isZero());
    EXPECT_EQ(sc.warnings.size(), 1u);
}

TEST(Srmf, FullyObservedRankTwo) {
    auto s = synth_tm(15, 30, 2, 10, 0.0, 9);
    SrmfOptions o;
    o.max_iter = 2000;
    o.tol = 1e-12;
    const auto f = srmf(s, 2, 1e-6, Matrix(), Matrix(), o);
    EXPECT_LT((f.product() - s.X).norm() / s.X.norm(), 1e-3);
    EXPECT_TRUE(nonincreasing(f.objective_trace));
}

TEST(Srmf, ZeroMatrixShrinksFactors) {
    TrafficSeries s;
    s.X = Matrix::Zero(5, 8);
    s.mask = Matrix::Ones(5, 8);
    const auto f = srmf(s, 2, 0.1, Matrix(), temporal_T(8));
    EXPECT_LT(f.L.norm() + f.R.norm(), 1e-6);
}

TEST(Srmf, ObjectiveNeverIncreases) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto s = synth_tm(12, 30, 3, 10, 0.05, seed);
        s.mask = make_mask(12, 30, MaskPattern::Random, 0.7, seed + 1);
        const Matrix xh = baseline_interpolate(s, 2);
        const auto sc = scale_constraints(spatial_S(xh, 3), temporal_T(30), xh, s.observed(), 0.1);
        SrmfOptions o;
        o.seed = seed;
        const auto f = srmf(s, 4, 0.1, sc.S, sc.T, o);
        EXPECT_TRUE(nonincreasing(f.objective_trace));
        EXPECT_NEAR(f.objective_trace.back(), srmf_objective(s, f.L, f.R, 0.1, sc.S, sc.T), 1e-9 * f.objective_trace.back());
    }
}

TEST(Srmf, RoutingMeasurementsOnly) {
    auto s = synth_tm(10, 24, 2, 12, 0.0, 11);
    Rng rng(12);
    s.routing = Matrix::NullaryExpr(6, 10, [&] { return rng.bernoulli(0.4) ? 1.0 : 0.0; });
    s.mask = Matrix::Zero(10, 24);
    SrmfOptions o;
    o.max_iter = 1000;
    o.tol = 1e-12;
    const auto f = srmf(s, 2, 1e-6, Matrix(), Matrix(), o);
    const Matrix y = s.routing * s.X;
    EXPECT_LT((s.routing * f.product() - y).norm() / y.norm(), 1e-3);
    EXPECT_TRUE(nonincreasing(f.objective_trace));
}

TEST(Srmf, SpatioTemporalBeatsPlainFactorization) {
    TmCompareParams p;
    p.missing = 0.8;
    p.n_flows = 30;
    p.m_times = 72;
    int wins = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto r = compare_interpolators(p, seed);
        wins += r.srmf < r.srsvd;
    }
    EXPECT_GE(wins, 15);
}

TEST(Knn, LocalInterpolationRules) {
    TrafficSeries s;
    s.X = Matrix::Zero(1, 12);
    s.X(0, 4) = 5.0;
    s.X(0, 6) = 5.0;
    s.mask = Matrix::Zero(1, 12);
    s.mask(0, 4) = s.mask(0, 6) = 1.0;
    const Matrix global = Matrix::Constant(1, 12, 9.0);
    const Matrix out = srmf_knn(s, global);
    EXPECT_DOUBLE_EQ(out(0, 5), 5.0);
    EXPECT_DOUBLE_EQ(out(0, 4), 5.0);
    EXPECT_DOUBLE_EQ(out(0, 0), 9.0);
    EXPECT_DOUBLE_EQ(out(0, 1), 5.0);
    EXPECT_DOUBLE_EQ(out(0, 9), 5.0);
    EXPECT_DOUBLE_EQ(out(0, 10), 9.0);

    s.X(0, 6) = 7.0;
    EXPECT_DOUBLE_EQ(srmf_knn(s, global)(0, 5), 6.0);
}

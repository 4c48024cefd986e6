#include "csnet/tmc/traffic.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/rng.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace csnet {

namespace {

Vector smoothed_walk(Index m, Rng& rng) {
    Vector w(m);
    double level = 0.0;
    for (Index t = 0; t < m; ++t) {
        level += rng.normal();
        w(t) = level;
    }
    Vector s = w;
    for (Index t = 0; t < m; ++t) {
        const Index lo = std::max<Index>(0, t - 3), hi = std::min<Index>(m - 1, t + 3);
        s(t) = w.segment(lo, hi - lo + 1).mean();
    }
    s.array() -= s.mean();
    const double peak = s.cwiseAbs().maxCoeff();
    if (peak > 0.0) s /= peak;
    return s;
}

}  // namespace

TrafficSeries synth_tm(Index n_flows, Index m_times, Index rank, double diurnal_period, double noise,
                       std::uint64_t seed) {
    require(n_flows >= 1 && m_times >= 1, "synth_tm: sizes must be positive");
    require(rank >= 1 && rank <= std::min(n_flows, m_times), "synth_tm: need 1 <= rank <= min(n, m)");
    require(diurnal_period > 0.0, "synth_tm: period must be positive");
    require(noise >= 0.0, "synth_tm: noise must be nonnegative");
    Rng rng(seed);
    const double w = 2.0 * std::numbers::pi / diurnal_period;
    Matrix L(n_flows, rank), R(m_times, rank);
    for (Index i = 0; i < n_flows; ++i) L(i, 0) = rng.uniform(0.5, 1.5);
    for (Index t = 0; t < m_times; ++t) R(t, 0) = 1.0 + 0.5 * std::sin(w * static_cast<double>(t));
    // Secondary components stay below the floor of the first, keeping X > 0.
    const double amplitude = rank > 1 ? 0.2 / static_cast<double>(rank - 1) : 0.0;
    for (Index c = 1; c < rank; ++c) {
        for (Index i = 0; i < n_flows; ++i) L(i, c) = rng.uniform();
        const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const Vector walk = smoothed_walk(m_times, rng);
        for (Index t = 0; t < m_times; ++t)
            R(t, c) = amplitude * (0.5 * std::sin(w * static_cast<double>(c + 1) * static_cast<double>(t) + phase) +
                                   0.5 * walk(t));
    }
    TrafficSeries s;
    s.X = L * R.transpose();
    if (noise > 0.0) {
        const double sd = noise * s.X.mean();
        for (Index j = 0; j < m_times; ++j)
            for (Index i = 0; i < n_flows; ++i) s.X(i, j) = std::max(0.0, s.X(i, j) + sd * rng.normal());
    }
    s.mask = Matrix::Ones(n_flows, m_times);
    return s;
}

MaskPattern parse_mask_pattern(const std::string& name) {
    if (name == "random") return MaskPattern::Random;
    if (name == "row" || name == "row-outage") return MaskPattern::RowOutage;
    if (name == "column" || name == "column-outage") return MaskPattern::ColumnOutage;
    fail(ErrorKind::InvalidParameter, "unknown mask pattern '" + name + "'");
}

const char* to_string(MaskPattern pattern) noexcept {
    switch (pattern) {
        case MaskPattern::Random: return "random";
        case MaskPattern::RowOutage: return "row-outage";
        case MaskPattern::ColumnOutage: return "column-outage";
    }
    return "unknown";
}

Matrix make_mask(Index n_flows, Index m_times, MaskPattern pattern, double missing_fraction, std::uint64_t seed) {
    require(n_flows >= 1 && m_times >= 1, "make_mask: sizes must be positive");
    require(missing_fraction >= 0.0 && missing_fraction <= 1.0, "make_mask: fraction must lie in [0, 1]");
    Rng rng(seed);
    Matrix mask = Matrix::Ones(n_flows, m_times);
    switch (pattern) {
        case MaskPattern::Random: {
            const Index total = n_flows * m_times;
            const auto gone = static_cast<Index>(std::lround(missing_fraction * static_cast<double>(total)));
            for (auto k : rng.choose(total, gone)) mask(k % n_flows, k / n_flows) = 0.0;
            break;
        }
        case MaskPattern::RowOutage: {
            const auto gone = static_cast<Index>(std::lround(missing_fraction * static_cast<double>(n_flows)));
            for (auto i : rng.choose(n_flows, gone)) mask.row(i).setZero();
            break;
        }
        case MaskPattern::ColumnOutage: {
            const auto gone = static_cast<Index>(std::lround(missing_fraction * static_cast<double>(m_times)));
            for (auto j : rng.choose(m_times, gone)) mask.col(j).setZero();
            break;
        }
    }
    return mask;
}

Matrix temporal_T(Index m) {
    require(m >= 2, "temporal_T: need m >= 2");
    Matrix t = Matrix::Identity(m, m);
    for (Index i = 0; i + 1 < m; ++i) t(i, i + 1) = -1.0;
    return t;
}

void svd_factors(const Matrix& x, Index r, Matrix& left, Matrix& right) {
    require(r >= 1 && r <= std::min(x.rows(), x.cols()), "svd_factors: need 1 <= r <= min(rows, cols)");
    Eigen::BDCSVD<Matrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector root = svd.singularValues().head(r).cwiseSqrt();
    left = svd.matrixU().leftCols(r) * root.asDiagonal();
    right = svd.matrixV().leftCols(r) * root.asDiagonal();
}

double nmae(const Matrix& truth, const Matrix& estimate, const Matrix& missing_mask) {
    require(truth.rows() == estimate.rows() && truth.cols() == estimate.cols() &&
                truth.rows() == missing_mask.rows() && truth.cols() == missing_mask.cols(),
            "nmae: shape mismatch");
    require((missing_mask.array() != 0.0).any(), "nmae: no missing entries");
    double num = 0.0, den = 0.0;
    for (Index j = 0; j < truth.cols(); ++j) {
        for (Index i = 0; i < truth.rows(); ++i) {
            if (missing_mask(i, j) == 0.0) continue;
            num += std::abs(estimate(i, j) - truth(i, j));
            den += std::abs(truth(i, j));
        }
    }
    if (den == 0.0) fail(ErrorKind::DegenerateInput, "nmae: truth is zero on every missing entry");
    return num / den;
}

}  // namespace csnet

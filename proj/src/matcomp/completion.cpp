#include "csnet/matcomp/completion.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/linalg.hpp"
#include "csnet/core/rng.hpp"

#include <algorithm>
#include <cmath>

namespace csnet {

void validate_masked(const MaskedMatrix& obs) {
    require(obs.data.rows() == obs.mask.rows() && obs.data.cols() == obs.mask.cols(),
            "masked matrix: data and mask shapes differ");
    require(((obs.mask.array() == 0.0) || (obs.mask.array() == 1.0)).all(), "masked matrix: mask must be 0/1");
    require((obs.mask.rowwise().sum().array() >= 1.0).all(), "masked matrix: a row has no samples");
    require((obs.mask.colwise().sum().array() >= 1.0).all(), "masked matrix: a column has no samples");
    require(obs.noise_bound >= 0.0, "masked matrix: noise bound must be nonnegative");
}

namespace {

bool covers(const Matrix& mask) {
    return (mask.rowwise().sum().array() >= 1.0).all() && (mask.colwise().sum().array() >= 1.0).all();
}

}  // namespace

Matrix sample_mask(Index n1, Index n2, Index m_samples, std::uint64_t seed) {
    require(n1 >= 1 && n2 >= 1, "sample_mask: dimensions must be positive");
    require(m_samples >= std::max(n1, n2) && m_samples <= n1 * n2,
            "sample_mask: need max(n1, n2) <= m_samples <= n1 * n2 to cover every row and column");
    Rng rng(seed);
    Matrix mask(n1, n2);
    constexpr int kMaxRejections = 20000;
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        mask.setZero();
        for (auto cell : rng.choose(n1 * n2, m_samples)) mask(cell % n1, cell / n1) = 1.0;
        if (covers(mask)) return mask;
    }
    // Covering pattern: a random bijection between the longer side and a
    // cyclic assignment of the shorter side.
    mask.setZero();
    const Index big = std::max(n1, n2);
    std::vector<Index> rows(static_cast<std::size_t>(n1)), cols(static_cast<std::size_t>(n2));
    for (Index i = 0; i < n1; ++i) rows[static_cast<std::size_t>(i)] = i;
    for (Index j = 0; j < n2; ++j) cols[static_cast<std::size_t>(j)] = j;
    rng.shuffle(rows.begin(), rows.end());
    rng.shuffle(cols.begin(), cols.end());
    for (Index t = 0; t < big; ++t)
        mask(rows[static_cast<std::size_t>(t % n1)], cols[static_cast<std::size_t>(t % n2)]) = 1.0;
    std::vector<Index> free_cells;
    for (Index c = 0; c < n1 * n2; ++c)
        if (mask(c % n1, c / n1) == 0.0) free_cells.push_back(c);
    const Index extra = m_samples - big;
    for (auto pick : rng.choose(static_cast<std::int64_t>(free_cells.size()), extra)) {
        const Index c = free_cells[static_cast<std::size_t>(pick)];
        mask(c % n1, c / n1) = 1.0;
    }
    return mask;
}

Matrix planted_low_rank(Index n1, Index n2, Index r, std::uint64_t seed) {
    require(n1 >= 1 && n2 >= 1 && r >= 1, "planted_low_rank: dimensions and rank must be positive");
    Rng rng(seed);
    auto draw = [&] { return rng.sign() * rng.uniform(0.5, 1.5); };
    const Matrix u = Matrix::NullaryExpr(n1, r, draw);
    const Matrix v = Matrix::NullaryExpr(n2, r, draw);
    return u * v.transpose();
}

Matrix apply_mask(const Matrix& x, const Matrix& mask) { return x.cwiseProduct(mask); }

double incoherence_mu_b(const Matrix& m) {
    require(m.size() > 0, "incoherence_mu_b: empty matrix");
    Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) fail(ErrorKind::DegenerateInput, "incoherence_mu_b: zero matrix");
    const Index r = (sv.array() > kZeroTolerance * sv(0)).count();
    const double u_peak = svd.matrixU().leftCols(r).cwiseAbs2().maxCoeff();
    const double v_peak = svd.matrixV().leftCols(r).cwiseAbs2().maxCoeff();
    return std::max(static_cast<double>(m.rows()) * u_peak, static_cast<double>(m.cols()) * v_peak);
}

double fpc_objective(const MaskedMatrix& obs, const Matrix& x, double lambda) {
    return 0.5 * apply_mask(x - obs.data, obs.mask).squaredNorm() + lambda * nuclear_norm(x);
}

FpcResult fpc_complete(const MaskedMatrix& obs, double lambda, const FpcOptions& options) {
    require(lambda > 0.0, "fpc_complete: lambda must be positive");
    require(options.max_iter > 0, "fpc_complete: max_iter must be positive");
    require(options.decay > 0.0 && options.decay < 1.0, "fpc_complete: decay must lie in (0, 1)");
    validate_masked(obs);

    const Matrix y = apply_mask(obs.data, obs.mask);
    FpcResult out;
    out.estimate = Matrix::Zero(y.rows(), y.cols());
    const double start = options.continuation ? Eigen::BDCSVD<Matrix>(y).singularValues()(0) : lambda;
    double mu = std::max(lambda, start * options.decay);
    if (y.squaredNorm() == 0.0) {
        out.converged = true;
        out.objective_trace.push_back(0.0);
        return out;
    }

    int stage_iter = 0;
    Matrix& x = out.estimate;
    for (int it = 0; it < options.max_iter; ++it) {
        const Matrix g = x - apply_mask(x - obs.data, obs.mask);
        Matrix next = singular_value_threshold(g, mu);
        const double change = (next - x).norm() / std::max(1.0, x.norm());
        x = std::move(next);
        ++out.iterations;
        ++stage_iter;
        out.objective_trace.push_back(fpc_objective(obs, x, mu));
        if (mu <= lambda) {
            if (change < options.tol) {
                out.converged = true;
                break;
            }
        } else if (change < options.stage_tol || stage_iter >= options.stage_max_iter) {
            mu = std::max(lambda, mu * options.decay);
            stage_iter = 0;
        }
    }
    return out;
}

}  // namespace csnet

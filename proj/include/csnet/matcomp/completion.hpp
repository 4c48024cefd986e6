#pragma once

#include "csnet/core/types.hpp"

#include <cstdint>
#include <vector>

namespace csnet {

/// Partially observed matrix: entries of `data` count only where mask == 1.
struct MaskedMatrix {
    Matrix data;
    Matrix mask;
    double noise_bound = 0.0;
};

/// Throws InvalidParameter unless data and mask agree in shape, the mask is
/// 0/1 and every row and column holds at least one sample.
void validate_masked(const MaskedMatrix& obs);

/// Uniform random 0/1 mask with exactly m_samples ones and every row and
/// column covered. Draws are rejected until coverage holds; after a bounded
/// number of rejections a covering pattern is placed first and the remaining
/// samples are drawn uniformly from the other cells.
Matrix sample_mask(Index n1, Index n2, Index m_samples, std::uint64_t seed);

/// Planted rank-r matrix U V^T whose factor entries are +-Uniform[0.5, 1.5],
/// which keeps the singular vectors spread out (low mu_B).
Matrix planted_low_rank(Index n1, Index n2, Index r, std::uint64_t seed);

/// P_Omega: keeps masked entries, zeroes the rest.
Matrix apply_mask(const Matrix& x, const Matrix& mask);

/// Smallest mu_B with max_k ||u_k||_inf^2 <= mu_B / n1 and
/// max_k ||v_k||_inf^2 <= mu_B / n2 over the singular vectors of the
/// nonzero singular values.
double incoherence_mu_b(const Matrix& m);

struct FpcOptions {
    int max_iter = 5000;
    double tol = 1e-8;
    /// Start at ||P_Omega(Y)||_2 and shrink by `decay` towards the target.
    bool continuation = true;
    double decay = 0.7;
    /// Relative iterate change that ends a continuation stage early.
    double stage_tol = 1e-3;
    int stage_max_iter = 100;
};

struct FpcResult {
    Matrix estimate;
    int iterations = 0;
    bool converged = false;
    /// 0.5 ||P_Omega(X_t - Y)||_F^2 + lambda_t ||X_t||_* after every step,
    /// evaluated at the lambda in force for that step.
    std::vector<double> objective_trace;
};

/// 0.5 ||P_Omega(X - Y)||_F^2 + lambda ||X||_*
double fpc_objective(const MaskedMatrix& obs, const Matrix& x, double lambda);

/// Fixed-point continuation: X <- shrink(X - P_Omega(X - Y), lambda) with
/// unit step, where shrink soft-thresholds the singular values. Converged once
/// ||X_{t+1} - X_t||_F / max(1, ||X_t||_F) < tol at the target lambda.
FpcResult fpc_complete(const MaskedMatrix& obs, double lambda, const FpcOptions& options = {});

}  // namespace csnet

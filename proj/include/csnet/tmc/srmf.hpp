#pragma once

#include "csnet/tmc/traffic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace csnet {

struct Factorization {
    Matrix L;
    Matrix R;
    std::vector<double> objective_trace;
    int iterations = 0;
    bool converged = false;

    Matrix product() const { return L * R.transpose(); }
};

struct SrmfOptions {
    int max_iter = 200;
    /// Stop once the objective drops by less than tol relative to its value.
    double tol = 1e-6;
    std::uint64_t seed = 0;
    /// Conjugate-gradient steps per half-iteration.
    int cg_iter = 25;
};

/// Objective minimized by srmf:
///   ||M .* (L R^T - D)||^2 + ||A L R^T - A X||^2 + lambda (||L||^2 + ||R||^2)
///   + ||S L R^T||^2 + ||L R^T T^T||^2
/// The routing term is present only when the series carries a routing matrix.
/// Empty S or T drop their terms.
double srmf_objective(const TrafficSeries& series, const Matrix& L, const Matrix& R, double lambda, const Matrix& S,
                      const Matrix& T);

/// Alternating least squares from a seeded random start. Each half-step
/// minimizes the objective over one factor by conjugate gradients warm-started
/// at the current factor, so the objective never increases. With empty S and
/// T this is SRSVD.
Factorization srmf(const TrafficSeries& series, Index r, double lambda, const Matrix& S, const Matrix& T,
                   const SrmfOptions& options = {});

/// Rank-r fit used to seed the spatial constraint: row and column effects on
/// the observed entries plus an SRSVD fit of what they leave.
Matrix baseline_fit(const TrafficSeries& series, Index r, double lambda = 1e-3);

/// X_base * (1 - M) + D * M.
Matrix baseline_interpolate(const TrafficSeries& series, Index r, double lambda = 1e-3);

/// Row i gets S(i, i) = 1 and S(i, j_k) = -w_k, where j_k are the K rows
/// nearest to row i in Euclidean distance and w the least-squares weights
/// reconstructing row i from them.
Matrix spatial_S(const Matrix& x_hat, Index K);

struct ScaledConstraints {
    Matrix S;
    Matrix T;
    std::vector<std::string> warnings;
};

/// Rescales so that ||S X_hat||_F = 0.1 sqrt(lambda) ||B||_F and
/// ||X_hat T^T||_F = sqrt(lambda) ||B||_F. A constraint that annihilates
/// X_hat (norm below 1e-8 ||C|| ||X_hat||) is replaced by zero with a warning.
ScaledConstraints scale_constraints(const Matrix& S, const Matrix& T, const Matrix& x_hat, const Matrix& B,
                                    double lambda);

/// Fills each missing entry by linear interpolation between the nearest
/// measured entries of the same flow within `window` slots on either side (or
/// the single one found), falling back to the global estimate.
Matrix srmf_knn(const TrafficSeries& series, const Matrix& global_estimate, int window = 3);

struct TmCompareParams {
    Index n_flows = 40;
    Index m_times = 96;
    Index rank = 3;
    double period = 24.0;
    double noise = 0.05;
    MaskPattern pattern = MaskPattern::Random;
    double missing = 0.9;
    Index r = 8;
    /// sqrt(lambda) ||B|| is the tolerated fit error, so lambda tracks noise^2.
    double lambda = 0.0025;
    Index K = 5;
    int window = 3;
};

struct TmCompareResult {
    double srsvd = 0.0;
    double srmf = 0.0;
    double srsvd_knn = 0.0;
    double srmf_knn = 0.0;
};

/// NMAE on the missing entries of one planted instance for SRSVD, SRMF and
/// their KNN hybrids, all sharing the same mask and starting point.
TmCompareResult compare_interpolators(const TmCompareParams& params, std::uint64_t seed);

}  // namespace csnet

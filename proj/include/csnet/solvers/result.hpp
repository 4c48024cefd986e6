#pragma once

#include "csnet/core/types.hpp"

#include <string>
#include <vector>

namespace csnet {

/// Output of every single-vector recovery routine.
struct RecoveryResult {
    Vector estimate;
    Support support;
    int iterations = 0;
    /// ||y - phi * estimate||_2, recomputed from the returned estimate.
    double residual_norm = 0.0;
    bool converged = false;
    /// Per-iteration residual norm (greedy solvers) or objective value (ISTA).
    std::vector<double> trace;
    std::vector<std::string> warnings;
};

/// Output of the multiple-measurement-vector solvers.
struct MmvResult {
    Matrix estimate;
    Support common_support;
    int iterations = 0;
    double residual_norm = 0.0;
    bool converged = false;
};

/// Zeroes entries outside the support of `estimate` and recomputes the
/// support and residual norm.
void finalize_result(RecoveryResult& result, const Matrix& phi, const Vector& y);

}  // namespace csnet

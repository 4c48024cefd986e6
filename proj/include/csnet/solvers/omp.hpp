#pragma once

#include "csnet/solvers/result.hpp"

namespace csnet {

/// Residuals below this fraction of ||y|| count as zero, so that epsilon = 0
/// terminates on exactly sparse inputs despite rounding.
inline constexpr double kResidualFloor = 1e-12;

/// Orthogonal matching pursuit.
///
/// Each iteration adds the column with the largest normalized correlation
/// |phi_i^T r| / ||phi_i|| (lowest index on ties), refits by least squares on
/// the accumulated support and updates the residual. Stops once
/// ||r||_2 <= epsilon, after max_iter iterations, or when no column correlates
/// with the residual. Unnormalized columns are accepted with a warning.
RecoveryResult omp(const Matrix& phi, const Vector& y, double epsilon, int max_iter);

}  // namespace csnet

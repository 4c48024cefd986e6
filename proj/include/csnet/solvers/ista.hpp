#pragma once

#include "csnet/solvers/result.hpp"

namespace csnet {

/// sign(v) * max(|v| - tau, 0), elementwise.
Vector soft_threshold(const Vector& v, double tau);

/// 0.5 ||y - phi x||^2 + lambda ||x||_1
double lasso_objective(const Matrix& phi, const Vector& y, const Vector& x, double lambda);

/// Iterative soft thresholding for the lasso objective with step 1/L,
/// L = ||phi^T phi||_2. Converged once the iterate moves by less than tol in
/// l2. The trace records the objective after every step.
RecoveryResult ista_lasso(const Matrix& phi, const Vector& y, double lambda, int max_iter = 5000,
                          double tol = 1e-10, const Vector& warm_start = Vector());

}  // namespace csnet

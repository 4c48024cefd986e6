#pragma once

#include "csnet/solvers/result.hpp"

#include <string>

namespace csnet {

enum class SolverKind { Omp, Cosamp, Lasso };

SolverKind parse_solver_kind(const std::string& name);
const char* to_string(SolverKind kind) noexcept;

/// Shared solver configuration used by the application modules.
struct SolverParams {
    SolverKind kind = SolverKind::Omp;
    /// Sparsity target. OMP uses it as the iteration cap; CoSaMP requires it.
    int k = 0;
    double epsilon = 0.0;
    int max_iter = 0;
    /// Lasso weight. When zero, lambda_ratio * ||phi^T y||_inf is used.
    double lambda = 0.0;
    double lambda_ratio = 0.01;
    double tol = 1e-10;
    /// Least-squares refit on the recovered support.
    bool debias = false;
};

RecoveryResult recover(const Matrix& phi, const Vector& y, const SolverParams& params);

}  // namespace csnet

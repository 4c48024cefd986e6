#include "csnet/solvers/recover.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/linalg.hpp"
#include "csnet/solvers/cosamp.hpp"
#include "csnet/solvers/ista.hpp"
#include "csnet/solvers/omp.hpp"

namespace csnet {

SolverKind parse_solver_kind(const std::string& name) {
    if (name == "omp") return SolverKind::Omp;
    if (name == "cosamp") return SolverKind::Cosamp;
    if (name == "lasso" || name == "ista") return SolverKind::Lasso;
    fail(ErrorKind::InvalidParameter, "unknown solver '" + name + "'");
}

const char* to_string(SolverKind kind) noexcept {
    switch (kind) {
        case SolverKind::Omp: return "omp";
        case SolverKind::Cosamp: return "cosamp";
        case SolverKind::Lasso: return "lasso";
    }
    return "unknown";
}

RecoveryResult recover(const Matrix& phi, const Vector& y, const SolverParams& params) {
    RecoveryResult result;
    switch (params.kind) {
        case SolverKind::Omp: {
            int iters = params.max_iter > 0 ? params.max_iter : static_cast<int>(std::min(phi.rows(), phi.cols()));
            if (params.k > 0) iters = std::min(iters, params.k);
            result = omp(phi, y, params.epsilon, iters);
            break;
        }
        case SolverKind::Cosamp: {
            require(params.k > 0, "recover: cosamp needs k");
            CosampOptions opt;
            if (params.max_iter > 0) opt.max_iter = params.max_iter;
            result = cosamp(phi, y, params.k, opt);
            break;
        }
        case SolverKind::Lasso: {
            double lambda = params.lambda;
            if (lambda <= 0.0) {
                const double scale = phi.size() ? (phi.transpose() * y).cwiseAbs().maxCoeff() : 0.0;
                if (scale == 0.0) {
                    result.estimate = Vector::Zero(phi.cols());
                    result.converged = true;
                    finalize_result(result, phi, y);
                    return result;
                }
                lambda = params.lambda_ratio * scale;
            }
            result = ista_lasso(phi, y, lambda, params.max_iter > 0 ? params.max_iter : 5000, params.tol);
            break;
        }
    }
    if (params.debias && !result.support.empty()) {
        const Vector coef = least_squares(select_columns(phi, result.support), y);
        result.estimate.setZero();
        for (std::size_t j = 0; j < result.support.size(); ++j)
            result.estimate(result.support[j]) = coef(static_cast<Index>(j));
        finalize_result(result, phi, y);
    }
    return result;
}

}  // namespace csnet

#include "csnet/solvers/ista.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/linalg.hpp"

namespace csnet {

Vector soft_threshold(const Vector& v, double tau) {
    return v.unaryExpr([tau](double a) { return a > tau ? a - tau : (a < -tau ? a + tau : 0.0); });
}

double lasso_objective(const Matrix& phi, const Vector& y, const Vector& x, double lambda) {
    return 0.5 * (y - phi * x).squaredNorm() + lambda * x.lpNorm<1>();
}

RecoveryResult ista_lasso(const Matrix& phi, const Vector& y, double lambda, int max_iter, double tol,
                          const Vector& warm_start) {
    require(lambda > 0.0, "ista_lasso: lambda must be positive");
    require(max_iter > 0, "ista_lasso: max_iter must be positive");
    require(phi.rows() == y.size(), "ista_lasso: dimension mismatch");
    require(warm_start.size() == 0 || warm_start.size() == phi.cols(), "ista_lasso: warm start has wrong length");

    RecoveryResult out;
    Vector x = warm_start.size() ? warm_start : Vector::Zero(phi.cols());
    const double lipschitz = gram_spectral_norm(phi);
    if (lipschitz == 0.0) {
        out.estimate = Vector::Zero(phi.cols());
        out.converged = true;
        finalize_result(out, phi, y);
        return out;
    }
    const double step = 1.0 / lipschitz;
    // The explicit Gram matrix only pays off when phi is not very wide.
    const bool use_gram = 2 * phi.rows() >= phi.cols();
    const Matrix gram = use_gram ? Matrix(phi.transpose() * phi) : Matrix();
    const Vector phit_y = phi.transpose() * y;
    out.trace.push_back(lasso_objective(phi, y, x, lambda));
    for (int it = 0; it < max_iter; ++it) {
        const Vector grad = use_gram ? Vector(gram * x - phit_y) : Vector(phi.transpose() * (phi * x) - phit_y);
        Vector next = soft_threshold(x - step * grad, lambda * step);
        const double change = (next - x).norm();
        x = std::move(next);
        ++out.iterations;
        out.trace.push_back(lasso_objective(phi, y, x, lambda));
        if (change < tol) {
            out.converged = true;
            break;
        }
    }
    out.estimate = x;
    finalize_result(out, phi, y);
    return out;
}

}  // namespace csnet

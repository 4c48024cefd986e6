#include "csnet/wsn/anomaly.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/linalg.hpp"
#include "csnet/solvers/ista.hpp"

#include <cmath>

namespace csnet {

Index anomaly_measurements(Index n, Index k0, Index k1) {
    require(n >= 2 && k0 >= 0 && k1 >= 0, "anomaly_measurements: bad sizes");
    return static_cast<Index>(std::ceil(4.0 * static_cast<double>(k0 + k1) * std::log(static_cast<double>(n))));
}

AnomalyRecovery recover_anomalous(const Vector& y, const Matrix& phi, const Matrix& psi, double lambda) {
    require(phi.rows() == y.size(), "recover_anomalous: dimension mismatch");
    require(psi.rows() == phi.cols() && psi.cols() == phi.cols(), "recover_anomalous: psi must be n x n");
    const Index n = phi.cols();
    const Matrix gram = psi.transpose() * psi;
    require((gram - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-8, "recover_anomalous: psi must be orthonormal");

    Matrix dict(phi.rows(), 2 * n);
    dict << phi * psi, phi;
    AnomalyRecovery out;
    out.x0 = Vector::Zero(n);
    out.x1 = Vector::Zero(n);
    const double scale = (dict.transpose() * y).cwiseAbs().maxCoeff();
    if (scale == 0.0) {
        out.converged = true;
        return out;
    }
    if (lambda <= 0.0) lambda = 1e-3 * scale;
    const auto lasso = ista_lasso(dict, y, lambda, 20000, 1e-10);
    out.converged = lasso.converged;
    if (!lasso.converged) out.warnings.emplace_back("recover_anomalous: ISTA hit its iteration cap");

    // Drop atoms far below the largest one, then refit without shrinkage.
    Support atoms = support_of(lasso.estimate, 1e-3);
    Vector coef = Vector::Zero(2 * n);
    if (!atoms.empty() && static_cast<Index>(atoms.size()) <= phi.rows()) {
        const Vector fit = least_squares(select_columns(dict, atoms), y);
        for (std::size_t t = 0; t < atoms.size(); ++t) coef(atoms[t]) = fit(static_cast<Index>(t));
    } else {
        coef = lasso.estimate;
    }
    out.x0 = psi * coef.head(n);
    out.x1 = coef.tail(n);
    for (Index i = 0; i < n; ++i)
        if (out.x1(i) != 0.0) out.spikes.push_back(i);
    return out;
}

}  // namespace csnet

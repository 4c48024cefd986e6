#pragma once

#include "csnet/core/types.hpp"

#include <string>
#include <vector>

namespace csnet {

struct AnomalyRecovery {
    /// Smooth part, psi * theta.
    Vector x0;
    /// Spike part.
    Vector x1;
    Support spikes;
    bool converged = false;
    std::vector<std::string> warnings;
};

/// Default measurement count 4 (k0 + k1) log n, rounded up.
Index anomaly_measurements(Index n, Index k0, Index k1);

/// Splits y = phi (psi theta + s) over the overcomplete dictionary [psi | I]
/// by l1 minimization (ISTA), then refits the detected atoms by least squares.
/// lambda <= 0 selects 1e-3 * ||(phi D)^T y||_inf.
AnomalyRecovery recover_anomalous(const Vector& y, const Matrix& phi, const Matrix& psi, double lambda = 0.0);

}  // namespace csnet

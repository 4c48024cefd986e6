#pragma once

#include "csnet/solvers/result.hpp"

namespace csnet {

/// Exhaustive P0 solver. Tries every support of size 0..k_max in increasing
/// size and returns the first whose least-squares residual is below
/// tolerance * max(||y||, 1). When none qualifies, the minimum-residual
/// candidate is returned with converged = false.
///
/// Throws ResourceLimit when C(n, k_max) > 1e6.
RecoveryResult l0_oracle(const Matrix& phi, const Vector& y, int k_max, double tolerance = 1e-9);

}  // namespace csnet

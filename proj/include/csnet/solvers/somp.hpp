#pragma once

#include "csnet/solvers/result.hpp"

#include <vector>

namespace csnet {

enum class SompRule {
    /// argmax_i sum_cols |phi_i^T r_col| / ||phi_i||.
    JointCorrelation,
    /// Rank-aware order-recursive selection: the residual range is
    /// orthonormalized and candidates are scored after projection onto the
    /// complement of the selected span. Succeeds at m = k + 1 when rank(X) = k.
    RankAware,
};

/// Simultaneous OMP for Y = phi X with X row-sparse. Selects k indices (fewer
/// if the residual vanishes) and fits every column by least squares on the
/// shared support.
MmvResult somp(const Matrix& phi, const Matrix& y, int k, SompRule rule = SompRule::JointCorrelation);

/// Variant with one measurement matrix per signal: y_j = phis[j] x_j, all x_j
/// sharing a support. Uses the joint-correlation rule.
MmvResult somp_multi(const std::vector<Matrix>& phis, const std::vector<Vector>& ys, int k);

}  // namespace csnet

#pragma once

#include "csnet/core/types.hpp"

#include <map>
#include <optional>
#include <vector>

namespace csnet {

/// sqrt(n) * max |<phi_k, psi_j>| with n the shared row dimension. Columns are
/// normalized first unless `normalize` is false.
double mutual_coherence(const Matrix& phi, const Matrix& psi, bool normalize = true);

/// Largest normalized inner product between distinct columns of phi.
double self_coherence(const Matrix& phi);

/// Smallest number of linearly dependent columns among subsets of size up to
/// max_cols, or nullopt when every tested subset is independent.
///
/// Subsets are grown depth-first; a column is dependent on an independent
/// prefix when its residual after projection onto the prefix span falls below
/// kZeroTolerance times the largest column norm.
std::optional<int> spark_bruteforce(const Matrix& phi, int max_cols);

/// Restricted isometry constant of order k by exhaustive enumeration of all
/// size-k column subsets. Throws ResourceLimit when C(n, k) > 1e6.
double rip_constant_bruteforce(const Matrix& phi, int k);

struct DiagnosticsResult {
    double mu = 0.0;
    std::optional<int> spark;
    std::map<int, double> delta_k;
};

/// Runs the coherence, spark and RIP diagnostics on phi against psi.
DiagnosticsResult diagnose(const Matrix& phi, const Matrix& psi, const std::vector<int>& rip_orders,
                           int spark_max_cols);

}  // namespace csnet

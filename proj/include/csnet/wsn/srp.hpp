#pragma once

#include "csnet/core/types.hpp"
#include "csnet/wsn/network.hpp"

#include <cstdint>
#include <vector>

namespace csnet {

struct SrpCost {
    /// One logical message per nonzero projection phi(j, i) x_i.
    long dissemination_messages = 0;
    /// The same messages counted hop by hop to their random holders.
    long dissemination_tx = 0;
    /// Base station request plus holder reply, hop by hop.
    long query_tx = 0;
};

struct SrpResult {
    Vector y;
    Matrix phi;
    /// Holder node of each measurement.
    std::vector<int> holders;
    /// Sensors contributing to each measurement.
    std::vector<int> contributors;
    SrpCost cost;
};

/// Sparse random projections: phi is drawn with the sparse_random recipe
/// (entries +-1 with probability 1/(2s) each), each measurement is stored at a
/// distinct random holder, and the base station later queries the m holders.
SrpResult srp_run(const SensorNetwork& net, const Vector& x, int s, Index m, std::uint64_t seed);

/// n / (M k sqrt(log n)), the measurement sparsity that balances the
/// required number of measurements against the per-measurement cost.
double srp_optimal_s(double n, double peak_ratio, double k);

/// Ratio ||x||_inf / ||x||_2 of a signal.
double peak_ratio(const Vector& x);

}  // namespace csnet

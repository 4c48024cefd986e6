#pragma once

#include "csnet/core/types.hpp"

#include <cstdint>
#include <vector>

namespace csnet {

struct TransportRow {
    Index n = 0;
    Index m = 0;
    int s = 0;
    double conventional = 0.0;
    double cdg = 0.0;
    double cdg_srp = 0.0;
};

struct TransportReport {
    std::vector<TransportRow> rows;
    /// Fitted log-log growth exponents.
    double conventional_exponent = 0.0;
    double cdg_exponent = 0.0;
    double cdg_srp_exponent = 0.0;
};

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Runs conventional, CDG and CDG+SRP collection on corner-rooted grids for
/// each n with m = ceil(k log(n/k)); costs are averaged over `seeds`.
TransportReport transport_cost_report(const std::vector<Index>& ns, Index k, int s,
                                      const std::vector<std::uint64_t>& seeds);

}  // namespace csnet

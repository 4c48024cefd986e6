#pragma once

#include <optional>

namespace csnet {

enum class BoundKind { Spark, Mip, Rip, Srp, Mc };

/// Inputs for the measurement-count calculators. Only the fields used by the
/// selected formula are required. The constant c defaults to 1.
struct BoundParams {
    double c = 1.0;
    std::optional<double> k;
    std::optional<double> n;
    std::optional<double> mu;
    std::optional<double> s;
    std::optional<double> peak_ratio;
};

/// Evaluates the selected sample-count formula (natural logarithms):
///   Spark: 2k
///   Mip:   c mu^2 k log n
///   Rip:   c k log(n / k)
///   Srp:   c s M^2 k^2 log n          (M = peak_ratio)
///   Mc:    c mu^4 n log^2 n            (mu = incoherence mu_B)
double sample_bound(BoundKind kind, const BoundParams& params);

}  // namespace csnet

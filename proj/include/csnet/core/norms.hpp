#pragma once

#include "csnet/core/types.hpp"

#include <limits>

namespace csnet {

inline constexpr double kInfinityNorm = std::numeric_limits<double>::infinity();

/// l_p norm. p = 0 counts nonzeros (relative zero tolerance), p = kInfinityNorm
/// is the max magnitude.
double lp_norm(const Vector& x, double p);

/// Error of the best k-term approximation measured in l_p: the norm of
/// everything except the k largest-magnitude entries.
double best_k_error(const Vector& x, Index k, double p);

/// Keeps the k largest-magnitude entries of x (ties go to the lower index).
Vector best_k_term(const Vector& x, Index k);

struct PowerLawFit {
    double c = 0.0;
    double alpha = 0.0;
};

/// Least-squares fit of log|x|_(i) = log c - alpha log i over the sorted
/// nonzero magnitudes.
PowerLawFit power_law_fit(const Vector& x);

}  // namespace csnet

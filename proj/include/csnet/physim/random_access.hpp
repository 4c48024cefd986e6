#pragma once

#include "csnet/core/types.hpp"

#include <cstdint>

namespace csnet {

/// Unit-norm gaussian signature codebook, one column per user.
Matrix make_codebook(Index n, Index users, std::uint64_t seed);

/// One slot of on-off random access: each user transmits a +-1 symbol with
/// probability `activity`; gaussian noise has per-sample variance
/// 1 / (n * snr), so snr is the per-user signal to noise ratio.
struct AccessSlot {
    Matrix codebook;
    Vector x;
    Vector y;
    Support active;
};

AccessSlot make_access_slot(Index n, Index users, double activity, double snr, std::uint64_t seed);

struct AccessDetection {
    Support active;
    Vector x;
};

/// Minimizes mu ||x||_1 + ||y - codebook x||^2 and declares a user active when
/// |x_i| > 1/2. A nonpositive mu selects 2 sigma sqrt(2 ln N) with
/// sigma = 1 / sqrt(n * snr).
AccessDetection random_access_detect(const Vector& y, const Matrix& codebook, double mu, double snr);

/// Single-user detection: user i is active when |codebook_i^T y| > 1/2.
Support matched_filter_detect(const Vector& y, const Matrix& codebook);

}  // namespace csnet

#pragma once

#include "csnet/core/types.hpp"
#include "csnet/solvers/recover.hpp"

#include <cstdint>
#include <vector>

namespace csnet {

/// Mexican-hat (second derivative of a gaussian) pulse sampled on
/// 2 * ceil(4 sigma) + 1 points with its peak at the center.
Vector mexican_hat(double sigma);

/// Columns are the pulse circularly shifted to start at 0..n-1, normalized.
BasisMatrix shift_dictionary(const Vector& pulse, Index n);

struct UwbEchoes {
    std::vector<Index> delays;
    std::vector<double> amplitudes;
};

/// Sum of pulse copies starting at each delay (circular), scaled by amplitude.
Vector uwb_waveform(const Vector& pulse, const UwbEchoes& echoes, Index n);

/// k echoes with circular separation at least min_separation and amplitudes
/// of magnitude in [0.5, 1.5] with random sign. Delays are sorted.
UwbEchoes make_echoes(Index n, Index k, Index min_separation, std::uint64_t seed);

struct UwbParams {
    /// Measurements per Nyquist sample.
    double rate = 0.1;
    std::uint64_t seed = 0;
};

/// Measures the received waveform with a gaussian matrix of round(rate * n)
/// rows and recovers up to k echoes by matching pursuit over the shift
/// dictionary. Amplitudes are in units of the unnormalized pulse.
UwbEchoes uwb_detect(const Vector& pulse, const Vector& received, int k, const UwbParams& uwb,
                     const SolverParams& params);

}  // namespace csnet

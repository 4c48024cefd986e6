#pragma once

#include "csnet/core/types.hpp"
#include "csnet/solvers/recover.hpp"

#include <cstdint>

namespace csnet {

/// Random demodulator: chip, filter, then sample every delta Nyquist steps.
///
/// Sample i is taken at Nyquist index i * delta + filter.size() - 1, the
/// first instant at which the causal filter has seen a full window. For a
/// unit impulse this is plain decimation starting at index 0.
struct AicConfig {
    Index n = 0;
    Index m = 0;
    Vector chips;
    Vector filter;
    Index delta = 1;

    Index sample_time(Index i) const { return i * delta + filter.size() - 1; }
};

/// Random +-1 chips, integrate-and-dump filter of length delta = n / m.
AicConfig make_aic_config(Index n, Index m, std::uint64_t seed);

void validate(const AicConfig& config);

/// Phi(i, j) = sum_t psi_j(t) chips(t) filter(sample_time(i) - t).
SensingMatrix aic_matrix(const AicConfig& config, const BasisMatrix& basis);

/// Runs the demodulator on a Nyquist-rate waveform.
Vector aic_sample(const AicConfig& config, const Vector& x);

SparseSignal aic_recover(const AicConfig& config, const Vector& y, const BasisMatrix& basis,
                         const SolverParams& params);

/// Sum of `count` on-grid tones with distinct bins in 1..n/2-1, amplitudes in
/// [1, 2] and uniform phases, expressed in the dft_real basis.
SparseSignal make_tones(Index n, Index count, std::uint64_t seed);

/// Sorted frequency bins carrying a nonzero dft_real coefficient.
Support frequency_support(const Vector& coefficients, double relative_tolerance = 1e-6);

/// Amplitude of the sinusoid at `bin` (sqrt(n/2) scaling of the orthonormal
/// cos/sin pair, sqrt(n) for dc).
double tone_amplitude(const Vector& coefficients, Index bin);

}  // namespace csnet

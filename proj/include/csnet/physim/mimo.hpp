#pragma once

#include "csnet/core/types.hpp"
#include "csnet/solvers/recover.hpp"

#include <cstdint>

namespace csnet {

/// Resolution of the virtual channel grid.
struct VirtualDims {
    Index receive = 1;   ///< resolvable angles of arrival N_R
    Index transmit = 1;  ///< resolvable angles of departure N_T
    Index delays = 1;    ///< resolvable delays L
    Index doppler = 0;   ///< Doppler half-width M (2M + 1 bins)

    Index size() const { return receive * transmit * delays * (2 * doppler + 1); }
};

/// Real-valued virtual channel coefficients, flattened with the Doppler index
/// fastest: ((i * N_T + k) * L + l) * (2M + 1) + (m + M).
struct VirtualChannel {
    VirtualDims dims;
    Vector h;

    Index size() const { return dims.size(); }
    Index nonzeros() const;
};

Index virtual_index(const VirtualDims& dims, Index aoa, Index aod, Index delay, Index doppler);

/// d nonzero coefficients at distinct grid points, magnitudes in [0.5, 1.5].
VirtualChannel planted_channel(const VirtualDims& dims, Index d, std::uint64_t seed);

/// Draws `paths` physical paths with continuous angles in [0, 1), delays in
/// [0, L) and Doppler shifts in [-M - 1/2, M + 1/2), then bins each onto the
/// nearest virtual grid point and sums gains there.
VirtualChannel binned_physical_channel(const VirtualDims& dims, Index paths, std::uint64_t seed);

struct MimoEstimate {
    VirtualChannel channel;
    Vector training;
    bool converged = false;
};

/// Probes the channel with m_train gaussian training rows and recovers the
/// virtual coefficients.
MimoEstimate mimo_estimate(const VirtualChannel& channel, Index m_train, std::uint64_t seed,
                           const SolverParams& params);

}  // namespace csnet

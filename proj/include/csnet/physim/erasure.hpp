#pragma once

#include "csnet/core/types.hpp"
#include "csnet/solvers/recover.hpp"

#include <cstdint>
#include <vector>

namespace csnet {

/// Which of l transmitted measurements arrived. Each measurement carries its
/// serial number, so the receiver knows `kept`.
struct ErasureChannel {
    Index l = 0;
    Support kept;

    Index erased() const { return l - static_cast<Index>(kept.size()); }
};

/// Drops e of l measurements uniformly at random.
ErasureChannel erase_random(Index l, Index e, std::uint64_t seed);

/// Nested erasure patterns: a fixed random order in which measurements are
/// lost, so the pattern for e is a superset of the pattern for e - 1.
ErasureChannel erase_prefix(const std::vector<Index>& loss_order, Index e);

struct ErasureCode {
    SensingMatrix phi;
    Vector y;
};

/// l gaussian projections of the signal x.
ErasureCode erasure_encode(const Vector& x, Index l, std::uint64_t seed);

/// Recovers x = psi theta from the surviving rows of phi.
Vector erasure_decode(const Vector& y_kept, const Support& kept, const Matrix& phi, const Matrix& psi,
                      const SolverParams& params);

/// Mean relative l2 error of erasure decoding over `trials` seeded encodings
/// of x, evaluated on each e of the grid with nested erasure patterns.
std::vector<double> erasure_sweep(const Vector& x, const Matrix& psi, Index l, const std::vector<Index>& e_grid,
                                  int trials, std::uint64_t seed, const SolverParams& params);

/// Coefficients c * i^(-alpha), i = 1..n, with random signs placed at random
/// positions.
Vector power_law_coefficients(Index n, double alpha, std::uint64_t seed);

}  // namespace csnet

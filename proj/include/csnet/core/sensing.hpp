#pragma once

#include "csnet/core/types.hpp"

#include <cstdint>
#include <optional>

namespace csnet {

/// Draws an m x n measurement matrix.
///
///  - Gaussian: i.i.d. N(0, 1/m)
///  - Bernoulli: +-1/sqrt(m) with probability 1/2 each
///  - SparseRandom: +1, -1 with probability 1/(2s) each, 0 otherwise
///  - BinaryRouting: 1 with probability 1/s (1/2 when s is absent), 0 otherwise
///
/// Entries are drawn row-major from a single stream, so the output is a pure
/// function of (recipe, m, n, seed, s).
SensingMatrix gen_sensing_matrix(Recipe recipe, Index m, Index n, std::uint64_t seed,
                                 std::optional<int> s = std::nullopt);

/// Wraps an explicit matrix.
SensingMatrix custom_sensing_matrix(Matrix entries);

/// Copy of a with unit-norm columns; zero columns stay zero.
Matrix normalize_columns(const Matrix& a);

Vector column_norms(const Matrix& a);

}  // namespace csnet

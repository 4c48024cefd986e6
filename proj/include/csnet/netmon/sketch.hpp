#pragma once

#include "csnet/core/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace csnet {

/// Linear sketch y = phi x of a key-count vector x that is never stored.
struct Sketch {
    Vector y;
    SensingMatrix phi;
    Index n_keys = 0;
};

/// Empty sketch with an m x n_keys gaussian matrix.
Sketch make_sketch(Index m, Index n_keys, std::uint64_t seed);

void sketch_update(Sketch& sketch, Index key, double count = 1.0);

/// The k heaviest keys with their estimated counts, ordered by key.
std::vector<std::pair<Index, double>> sketch_recover(const Sketch& sketch, int k);

/// One decimal key per line; blank lines are skipped.
std::vector<Index> read_stream(std::istream& in);

}  // namespace csnet

#pragma once

#include "csnet/core/types.hpp"

#include <filesystem>
#include <iosfwd>

namespace csnet {

// Text format: a "rows cols" line followed by row-major whitespace-separated
// decimals. Masks use the same layout with 0/1 entries.

Matrix read_matrix(std::istream& in);
Matrix read_matrix(const std::filesystem::path& path);
void write_matrix(std::ostream& out, const Matrix& m);
void write_matrix(const std::filesystem::path& path, const Matrix& m);

/// Reads a 0/1 mask; any other entry is rejected.
Matrix read_mask(const std::filesystem::path& path);

}  // namespace csnet

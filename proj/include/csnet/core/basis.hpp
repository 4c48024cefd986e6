#pragma once

#include "csnet/core/types.hpp"

namespace csnet {

BasisMatrix identity_basis(Index n);

/// Orthonormal real Fourier basis ordered by frequency:
/// [dc, cos 1, sin 1, cos 2, sin 2, ..., (nyquist when n is even)].
BasisMatrix dft_real_basis(Index n);

/// Frequency bin of a dft_real column index.
Index dft_real_bin(Index column);

/// Orthonormal Haar wavelet basis; n must be a power of two.
BasisMatrix haar_basis(Index n);

BasisMatrix make_basis(BasisKind kind, Index n);

/// Max deviation of the Gram matrix from the identity.
double orthonormality_defect(const Matrix& basis);

}  // namespace csnet

#include "csnet/core/basis.hpp"

#include "csnet/core/error.hpp"

#include <cmath>
#include <numbers>

namespace csnet {

BasisMatrix identity_basis(Index n) {
    require(n >= 1, "identity_basis: n must be positive");
    return {Matrix::Identity(n, n), BasisKind::Identity, {}};
}

BasisMatrix dft_real_basis(Index n) {
    require(n >= 1, "dft_real_basis: n must be positive");
    Matrix b(n, n);
    const double dn = static_cast<double>(n);
    b.col(0).setConstant(1.0 / std::sqrt(dn));
    const Index pairs = (n - 1) / 2;
    const double scale = std::sqrt(2.0 / dn);
    for (Index f = 1; f <= pairs; ++f) {
        for (Index t = 0; t < n; ++t) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(f * t) / dn;
            b(t, 2 * f - 1) = scale * std::cos(angle);
            b(t, 2 * f) = scale * std::sin(angle);
        }
    }
    if (n % 2 == 0 && n > 1) {
        for (Index t = 0; t < n; ++t) b(t, n - 1) = (t % 2 == 0 ? 1.0 : -1.0) / std::sqrt(dn);
    }
    return {std::move(b), BasisKind::DftReal, {}};
}

Index dft_real_bin(Index column) { return (column + 1) / 2; }

BasisMatrix haar_basis(Index n) {
    require(n >= 1 && (n & (n - 1)) == 0, "haar_basis: n must be a power of two");
    Matrix b = Matrix::Zero(n, n);
    b.col(0).setConstant(1.0 / std::sqrt(static_cast<double>(n)));
    Index col = 1;
    for (Index width = n; width >= 2; width /= 2) {
        const double amp = 1.0 / std::sqrt(static_cast<double>(width));
        for (Index start = 0; start < n; start += width) {
            for (Index t = 0; t < width / 2; ++t) b(start + t, col) = amp;
            for (Index t = width / 2; t < width; ++t) b(start + t, col) = -amp;
            ++col;
        }
    }
    return {std::move(b), BasisKind::Haar, {}};
}

BasisMatrix make_basis(BasisKind kind, Index n) {
    switch (kind) {
        case BasisKind::Identity: return identity_basis(n);
        case BasisKind::DftReal: return dft_real_basis(n);
        case BasisKind::Haar: return haar_basis(n);
        default: break;
    }
    fail(ErrorKind::InvalidParameter,
         std::string("make_basis: kind '") + to_string(kind) + "' needs explicit construction");
}

double orthonormality_defect(const Matrix& basis) {
    const Matrix gram = basis.transpose() * basis;
    return (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

}  // namespace csnet

#pragma once

#include "csnet/solvers/result.hpp"

namespace csnet {

enum class CosampHalting {
    /// Run exactly max_iter iterations.
    MaxIter,
    /// Stop when ||z||_2 <= epsilon.
    ResidualEps,
    /// Stop when ||phi^T z||_inf <= epsilon.
    ProxyEps,
    /// max_iter cap with the ResidualEps early exit.
    Combined,
};

struct CosampOptions {
    CosampHalting halting = CosampHalting::Combined;
    int max_iter = 50;
    double epsilon = 1e-10;
};

/// Compressive sampling matching pursuit for a k-sparse target.
RecoveryResult cosamp(const Matrix& phi, const Vector& y, int k, const CosampOptions& options = {});

}  // namespace csnet

#include "csnet/solvers/cosamp.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace csnet {

namespace {

// Indices of the `count` largest-magnitude entries, lowest index on ties.
Support top_entries(const Vector& v, Index count) {
    std::vector<Index> idx(static_cast<std::size_t>(v.size()));
    std::iota(idx.begin(), idx.end(), Index{0});
    count = std::min(count, v.size());
    std::partial_sort(idx.begin(), idx.begin() + count, idx.end(), [&](Index a, Index b) {
        const double fa = std::abs(v(a));
        const double fb = std::abs(v(b));
        return fa != fb ? fa > fb : a < b;
    });
    idx.resize(static_cast<std::size_t>(count));
    return idx;
}

}  // namespace

RecoveryResult cosamp(const Matrix& phi, const Vector& y, int k, const CosampOptions& options) {
    require(k > 0, "cosamp: k must be positive");
    require(2 * k <= phi.cols(), "cosamp: need 2k <= n");
    require(phi.rows() == y.size(), "cosamp: dimension mismatch");
    require(options.max_iter > 0, "cosamp: max_iter must be positive");
    const Index n = phi.cols();

    RecoveryResult out;
    Vector x = Vector::Zero(n);
    Vector z = y;
    out.trace.push_back(z.norm());

    auto halted = [&](const Vector& residual) {
        switch (options.halting) {
            case CosampHalting::MaxIter: return false;
            case CosampHalting::ProxyEps:
                return (phi.transpose() * residual).cwiseAbs().maxCoeff() <= options.epsilon;
            case CosampHalting::ResidualEps:
            case CosampHalting::Combined: return residual.norm() <= options.epsilon;
        }
        return false;
    };

    if (y.norm() == 0.0 || (options.halting != CosampHalting::MaxIter && halted(z))) {
        out.converged = true;
        out.estimate = x;
        finalize_result(out, phi, y);
        return out;
    }

    for (int it = 0; it < options.max_iter; ++it) {
        const Vector u = phi.transpose() * z;
        Support merged = top_entries(u, 2 * k);
        for (Index i = 0; i < n; ++i)
            if (x(i) != 0.0) merged.push_back(i);
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

        const Vector b_t = least_squares(select_columns(phi, merged), y);
        Vector b = Vector::Zero(n);
        for (std::size_t j = 0; j < merged.size(); ++j) b(merged[j]) = b_t(static_cast<Index>(j));

        Vector next = Vector::Zero(n);
        for (Index i : top_entries(b, k)) next(i) = b(i);

        const bool unchanged = (next - x).norm() <= 1e-14 * std::max(1.0, x.norm());
        x = std::move(next);
        z = y - phi * x;
        ++out.iterations;
        out.trace.push_back(z.norm());
        if (halted(z)) {
            out.converged = true;
            break;
        }
        if (unchanged && options.halting != CosampHalting::MaxIter) {
            out.warnings.emplace_back("cosamp: estimate stalled before the halting criterion");
            break;
        }
    }
    if (options.halting == CosampHalting::MaxIter) out.converged = true;
    out.estimate = x;
    finalize_result(out, phi, y);
    return out;
}

}  // namespace csnet

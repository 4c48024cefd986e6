#include "csnet/solvers/omp.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/linalg.hpp"
#include "csnet/core/sensing.hpp"

#include <cmath>

namespace csnet {

RecoveryResult omp(const Matrix& phi, const Vector& y, double epsilon, int max_iter) {
    require(max_iter > 0, "omp: max_iter must be positive");
    require(epsilon >= 0.0, "omp: epsilon must be nonnegative");
    require(phi.rows() == y.size(), "omp: dimension mismatch");
    const Index n = phi.cols();

    RecoveryResult out;
    const Vector norms = column_norms(phi);
    if (((norms.array() - 1.0).abs() > 1e-6).any())
        out.warnings.emplace_back("omp: columns not unit-norm; correlations normalized internally");

    const double stop = std::max(epsilon, kResidualFloor * y.norm());
    Vector r = y;
    Vector coef;
    Support support;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    const Index cap = std::min<Index>(max_iter, std::min(n, phi.rows()));
    out.trace.push_back(r.norm());
    while (r.norm() > stop && static_cast<Index>(support.size()) < cap) {
        const Vector corr = phi.transpose() * r;
        Index pick = -1;
        double best = 0.0;
        for (Index i = 0; i < n; ++i) {
            if (used[static_cast<std::size_t>(i)] || norms(i) == 0.0) continue;
            const double c = std::abs(corr(i)) / norms(i);
            if (c > best) {
                best = c;
                pick = i;
            }
        }
        if (pick < 0 || best <= 1e-14 * y.norm()) break;
        used[static_cast<std::size_t>(pick)] = 1;
        support.push_back(pick);
        const Matrix a = select_columns(phi, support);
        coef = least_squares(a, y);
        r = y - a * coef;
        ++out.iterations;
        out.trace.push_back(r.norm());
    }
    out.estimate = Vector::Zero(n);
    for (std::size_t j = 0; j < support.size(); ++j) out.estimate(support[j]) = coef(static_cast<Index>(j));
    out.converged = r.norm() <= stop;
    finalize_result(out, phi, y);
    return out;
}

}  // namespace csnet

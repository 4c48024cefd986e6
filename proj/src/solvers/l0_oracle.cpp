#include "csnet/solvers/l0_oracle.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/linalg.hpp"

#include <limits>

namespace csnet {

RecoveryResult l0_oracle(const Matrix& phi, const Vector& y, int k_max, double tolerance) {
    require(phi.rows() == y.size(), "l0_oracle: dimension mismatch");
    require(k_max >= 0, "l0_oracle: k_max must be nonnegative");
    const int n = static_cast<int>(phi.cols());
    k_max = std::min(k_max, n);
    if (binomial(n, k_max) > 1'000'000) fail(ErrorKind::ResourceLimit, "l0_oracle: C(n, k_max) exceeds 1e6");

    const double threshold = tolerance * std::max(y.norm(), 1.0);
    RecoveryResult best;
    best.estimate = Vector::Zero(n);
    double best_residual = y.norm();
    int evaluated = 1;
    if (best_residual <= threshold) {
        best.converged = true;
        finalize_result(best, phi, y);
        return best;
    }
    Support cols;
    for (int size = 1; size <= k_max; ++size) {
        bool found = false;
        for_each_combination(n, size, [&](std::span<const int> s) {
            ++evaluated;
            cols.assign(s.begin(), s.end());
            const Matrix a = select_columns(phi, cols);
            const Vector coef = least_squares(a, y);
            const double r = (y - a * coef).norm();
            if (r < best_residual) {
                best_residual = r;
                best.estimate.setZero();
                for (int j = 0; j < size; ++j) best.estimate(cols[static_cast<std::size_t>(j)]) = coef(j);
                if (r <= threshold) {
                    found = true;
                    return false;
                }
            }
            return true;
        });
        if (found) {
            best.converged = true;
            break;
        }
    }
    best.iterations = evaluated;
    finalize_result(best, phi, y);
    return best;
}

}  // namespace csnet

#include "csnet/solvers/result.hpp"

namespace csnet {

void finalize_result(RecoveryResult& result, const Matrix& phi, const Vector& y) {
    result.support = support_of(result.estimate);
    Vector cleaned = Vector::Zero(result.estimate.size());
    for (Index i : result.support) cleaned(i) = result.estimate(i);
    result.estimate = std::move(cleaned);
    result.residual_norm = (y - phi * result.estimate).norm();
}

}  // namespace csnet

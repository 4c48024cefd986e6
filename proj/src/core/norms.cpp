#include "csnet/core/norms.hpp"

#include "csnet/core/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace csnet {

namespace {

double lp_of(const Vector& x, double p) {
    if (std::isinf(p)) return x.size() ? x.cwiseAbs().maxCoeff() : 0.0;
    if (p == 0.0) return static_cast<double>(support_of(x).size());
    if (p == 1.0) return x.cwiseAbs().sum();
    if (p == 2.0) return x.norm();
    return std::pow(x.cwiseAbs().array().pow(p).sum(), 1.0 / p);
}

std::vector<Index> order_by_magnitude(const Vector& x) {
    std::vector<Index> idx(static_cast<std::size_t>(x.size()));
    std::iota(idx.begin(), idx.end(), Index{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](Index a, Index b) { return std::abs(x(a)) > std::abs(x(b)); });
    return idx;
}

}  // namespace

double lp_norm(const Vector& x, double p) {
    require(x.size() > 0, "lp_norm: empty vector");
    require(!std::isnan(p) && p >= 0.0, "lp_norm: p must be >= 0 or infinity");
    return lp_of(x, p);
}

Vector best_k_term(const Vector& x, Index k) {
    require(k >= 0 && k <= x.size(), "best_k_term: need 0 <= k <= n");
    Vector out = Vector::Zero(x.size());
    const auto idx = order_by_magnitude(x);
    for (Index i = 0; i < k; ++i) out(idx[static_cast<std::size_t>(i)]) = x(idx[static_cast<std::size_t>(i)]);
    return out;
}

double best_k_error(const Vector& x, Index k, double p) {
    require(k >= 0 && k <= x.size(), "best_k_error: need 0 <= k <= n");
    require(!std::isnan(p) && p >= 0.0, "best_k_error: p must be >= 0 or infinity");
    const Vector tail = x - best_k_term(x, k);
    if (p == 0.0) {
        // Count against the scale of x, not of the tail.
        const double peak = x.size() ? x.cwiseAbs().maxCoeff() : 0.0;
        return static_cast<double>((tail.array().abs() > kZeroTolerance * peak).count());
    }
    return lp_of(tail, p);
}

PowerLawFit power_law_fit(const Vector& x) {
    const Support nz = support_of(x);
    if (nz.empty()) fail(ErrorKind::DegenerateInput, "power_law_fit: all-zero input");
    require(nz.size() >= 3, "power_law_fit: need at least 3 nonzero entries");
    std::vector<double> mags;
    mags.reserve(nz.size());
    for (Index i : nz) mags.push_back(std::abs(x(i)));
    std::sort(mags.begin(), mags.end(), std::greater<>());
    const auto count = static_cast<Index>(mags.size());
    Eigen::MatrixX2d design(count, 2);
    Vector target(count);
    for (Index i = 0; i < count; ++i) {
        design(i, 0) = 1.0;
        design(i, 1) = std::log(static_cast<double>(i + 1));
        target(i) = std::log(mags[static_cast<std::size_t>(i)]);
    }
    const Eigen::Vector2d beta = design.colPivHouseholderQr().solve(target);
    return {std::exp(beta(0)), -beta(1)};
}

}  // namespace csnet

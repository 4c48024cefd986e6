#include "csnet/physim/random_access.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/rng.hpp"
#include "csnet/core/sensing.hpp"
#include "csnet/solvers/ista.hpp"

#include <cmath>

namespace csnet {

namespace {

constexpr double kDecision = 0.5;

Support above(const Vector& v) {
    Support s;
    for (Index i = 0; i < v.size(); ++i)
        if (std::abs(v(i)) > kDecision) s.push_back(i);
    return s;
}

}  // namespace

Matrix make_codebook(Index n, Index users, std::uint64_t seed) {
    require(n >= 1 && users >= 1, "make_codebook: sizes must be positive");
    return normalize_columns(gen_sensing_matrix(Recipe::Gaussian, n, users, seed).entries);
}

AccessSlot make_access_slot(Index n, Index users, double activity, double snr, std::uint64_t seed) {
    require(activity >= 0.0 && activity <= 1.0, "make_access_slot: activity must be in [0, 1]");
    require(snr > 0.0, "make_access_slot: snr must be positive");
    AccessSlot s;
    s.codebook = make_codebook(n, users, derive_seed(seed, {0}));
    Rng rng(derive_seed(seed, {1}));
    s.x = Vector::Zero(users);
    for (Index i = 0; i < users; ++i)
        if (rng.bernoulli(activity)) {
            s.x(i) = rng.sign();
            s.active.push_back(i);
        }
    const double sigma = 1.0 / std::sqrt(static_cast<double>(n) * snr);
    Vector noise(n);
    for (Index i = 0; i < n; ++i) noise(i) = sigma * rng.normal();
    s.y = s.codebook * s.x + noise;
    return s;
}

AccessDetection random_access_detect(const Vector& y, const Matrix& codebook, double mu, double snr) {
    require(y.size() == codebook.rows(), "random_access_detect: y length must match codeword length");
    require(snr > 0.0, "random_access_detect: snr must be positive");
    if (mu <= 0.0) {
        const double sigma = 1.0 / std::sqrt(static_cast<double>(codebook.rows()) * snr);
        mu = 2.0 * sigma * std::sqrt(2.0 * std::log(static_cast<double>(codebook.cols())));
    }
    // mu ||x||_1 + ||r||^2 is twice the lasso objective with lambda = mu / 2.
    const auto r = ista_lasso(codebook, y, 0.5 * mu, 20000, 1e-10);
    return {above(r.estimate), r.estimate};
}

Support matched_filter_detect(const Vector& y, const Matrix& codebook) {
    require(y.size() == codebook.rows(), "matched_filter_detect: y length must match codeword length");
    return above(codebook.transpose() * y);
}

}  // namespace csnet

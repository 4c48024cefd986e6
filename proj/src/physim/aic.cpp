#include "csnet/physim/aic.hpp"

#include "csnet/core/basis.hpp"
#include "csnet/core/error.hpp"
#include "csnet/core/rng.hpp"
#include "csnet/core/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace csnet {

AicConfig make_aic_config(Index n, Index m, std::uint64_t seed) {
    require(n >= 1 && m >= 1 && m <= n, "make_aic_config: need 1 <= m <= n");
    AicConfig c;
    c.n = n;
    c.m = m;
    c.delta = n / m;
    c.chips.resize(n);
    Rng rng(seed);
    for (Index t = 0; t < n; ++t) c.chips(t) = rng.sign();
    c.filter = Vector::Ones(c.delta);
    return c;
}

void validate(const AicConfig& c) {
    require(c.n >= 1 && c.m >= 1, "aic: n and m must be positive");
    require(c.delta >= 1, "aic: delta must be positive");
    require(c.chips.size() == c.n, "aic: chip sequence must have length n");
    for (Index t = 0; t < c.n; ++t)
        require(c.chips(t) == 1.0 || c.chips(t) == -1.0, "aic: chips must be +1 or -1");
    require(c.filter.size() >= 1, "aic: filter must not be empty");
    require(c.filter.size() <= c.n, "aic: filter longer than n");
    require(c.m * c.delta <= c.n, "aic: need m * delta <= n");
    require(c.sample_time(c.m - 1) < c.n, "aic: last sample falls outside the Nyquist grid");
}

namespace {

/// Row i of the chip-filter-sample operator acting on the Nyquist grid.
Matrix demodulator(const AicConfig& c) {
    Matrix d = Matrix::Zero(c.m, c.n);
    const Index taps = c.filter.size();
    for (Index i = 0; i < c.m; ++i) {
        const Index ti = c.sample_time(i);
        for (Index lag = 0; lag < taps; ++lag) {
            const Index t = ti - lag;
            if (t < 0) break;
            d(i, t) = c.filter(lag) * c.chips(t);
        }
    }
    return d;
}

}  // namespace

SensingMatrix aic_matrix(const AicConfig& config, const BasisMatrix& basis) {
    validate(config);
    require(basis.dimension() == config.n, "aic_matrix: basis dimension must equal n");
    return custom_sensing_matrix(demodulator(config) * basis.entries);
}

Vector aic_sample(const AicConfig& config, const Vector& x) {
    validate(config);
    require(x.size() == config.n, "aic_sample: signal length must equal n");
    return demodulator(config) * x;
}

SparseSignal aic_recover(const AicConfig& config, const Vector& y, const BasisMatrix& basis,
                         const SolverParams& params) {
    require(y.size() == config.m, "aic_recover: y must have length m");
    const Matrix phi = aic_matrix(config, basis).entries;
    const Vector norms = column_norms(phi);
    const auto r = recover(normalize_columns(phi), y, params);
    Vector theta = Vector::Zero(phi.cols());
    for (Index j = 0; j < phi.cols(); ++j)
        if (norms(j) > 0.0) theta(j) = r.estimate(j) / norms(j);
    return make_sparse_signal(basis, theta);
}

SparseSignal make_tones(Index n, Index count, std::uint64_t seed) {
    require(n >= 4, "make_tones: n must be at least 4");
    const Index top = (n - 1) / 2;
    require(count >= 0 && count <= top, "make_tones: too many tones for the grid");
    Rng rng(seed);
    Vector theta = Vector::Zero(n);
    const double scale = std::sqrt(static_cast<double>(n) / 2.0);
    for (auto pick : rng.choose(top, count)) {
        const Index bin = pick + 1;
        const double amp = rng.uniform(1.0, 2.0);
        const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
        theta(2 * bin - 1) = amp * std::cos(phase) * scale;
        theta(2 * bin) = -amp * std::sin(phase) * scale;
    }
    return make_sparse_signal(dft_real_basis(n), theta);
}

Support frequency_support(const Vector& coefficients, double relative_tolerance) {
    std::set<Index> bins;
    for (Index j : support_of(coefficients, relative_tolerance)) bins.insert(dft_real_bin(j));
    return {bins.begin(), bins.end()};
}

double tone_amplitude(const Vector& c, Index bin) {
    const Index n = c.size();
    const double dn = static_cast<double>(n);
    if (bin == 0) return std::abs(c(0)) / std::sqrt(dn);
    if (n % 2 == 0 && bin == n / 2) return std::abs(c(n - 1)) / std::sqrt(dn);
    return std::hypot(c(2 * bin - 1), c(2 * bin)) / std::sqrt(dn / 2.0);
}

}  // namespace csnet

#include "csnet/core/sensing.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/rng.hpp"

#include <cmath>

namespace csnet {

SensingMatrix gen_sensing_matrix(Recipe recipe, Index m, Index n, std::uint64_t seed, std::optional<int> s) {
    require(m >= 1 && n >= 1, "gen_sensing_matrix: m and n must be positive");
    SensingMatrix out;
    out.recipe = recipe;
    out.seed = seed;
    out.entries.resize(m, n);
    Rng rng(seed);
    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
    switch (recipe) {
        case Recipe::Gaussian:
            for (Index i = 0; i < m; ++i)
                for (Index j = 0; j < n; ++j) out.entries(i, j) = rng.normal() * inv_sqrt_m;
            break;
        case Recipe::Bernoulli:
            for (Index i = 0; i < m; ++i)
                for (Index j = 0; j < n; ++j) out.entries(i, j) = rng.sign() * inv_sqrt_m;
            break;
        case Recipe::SparseRandom: {
            require(s.has_value(), "gen_sensing_matrix: sparse_random requires s");
            require(*s >= 1, "gen_sensing_matrix: s must be >= 1");
            out.s = *s;
            const double half = 0.5 / static_cast<double>(*s);
            for (Index i = 0; i < m; ++i)
                for (Index j = 0; j < n; ++j) {
                    const double u = rng.uniform();
                    out.entries(i, j) = u < half ? 1.0 : (u < 2.0 * half ? -1.0 : 0.0);
                }
            break;
        }
        case Recipe::BinaryRouting: {
            const int sv = s.value_or(2);
            require(sv >= 1, "gen_sensing_matrix: s must be >= 1");
            out.s = sv;
            const double p = 1.0 / static_cast<double>(sv);
            for (Index i = 0; i < m; ++i)
                for (Index j = 0; j < n; ++j) out.entries(i, j) = rng.uniform() < p ? 1.0 : 0.0;
            break;
        }
        case Recipe::Custom:
            fail(ErrorKind::InvalidParameter, "gen_sensing_matrix: custom matrices are not generated");
    }
    return out;
}

SensingMatrix custom_sensing_matrix(Matrix entries) {
    SensingMatrix out;
    out.entries = std::move(entries);
    out.recipe = Recipe::Custom;
    return out;
}

Vector column_norms(const Matrix& a) { return a.colwise().norm().transpose(); }

Matrix normalize_columns(const Matrix& a) {
    Matrix out = a;
    for (Index j = 0; j < a.cols(); ++j) {
        const double nrm = a.col(j).norm();
        if (nrm > 0.0) out.col(j) /= nrm;
    }
    return out;
}

}  // namespace csnet

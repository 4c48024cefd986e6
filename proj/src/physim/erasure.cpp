#include "csnet/physim/erasure.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/linalg.hpp"
#include "csnet/core/rng.hpp"
#include "csnet/core/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace csnet {

ErasureChannel erase_random(Index l, Index e, std::uint64_t seed) {
    require(l >= 1 && e >= 0 && e <= l, "erase_random: need 0 <= e <= l");
    std::vector<Index> order(static_cast<std::size_t>(l));
    std::iota(order.begin(), order.end(), Index{0});
    Rng rng(seed);
    rng.shuffle(order.begin(), order.end());
    return erase_prefix(order, e);
}

ErasureChannel erase_prefix(const std::vector<Index>& loss_order, Index e) {
    const auto l = static_cast<Index>(loss_order.size());
    require(e >= 0 && e <= l, "erase_prefix: need 0 <= e <= l");
    ErasureChannel c;
    c.l = l;
    c.kept.assign(loss_order.begin() + e, loss_order.end());
    std::sort(c.kept.begin(), c.kept.end());
    return c;
}

ErasureCode erasure_encode(const Vector& x, Index l, std::uint64_t seed) {
    require(x.size() >= 1 && l >= 1, "erasure_encode: need a signal and l >= 1");
    ErasureCode code;
    code.phi = gen_sensing_matrix(Recipe::Gaussian, l, x.size(), seed);
    code.y = code.phi.entries * x;
    return code;
}

Vector erasure_decode(const Vector& y_kept, const Support& kept, const Matrix& phi, const Matrix& psi,
                      const SolverParams& params) {
    require(!kept.empty(), "erasure_decode: no surviving measurements");
    require(y_kept.size() == static_cast<Index>(kept.size()), "erasure_decode: one value per kept index");
    require(psi.rows() == phi.cols(), "erasure_decode: psi rows must match phi columns");
    for (Index i : kept) require(i >= 0 && i < phi.rows(), "erasure_decode: kept index out of range");
    const auto r = recover(select_rows(phi, kept) * psi, y_kept, params);
    return psi * r.estimate;
}

std::vector<double> erasure_sweep(const Vector& x, const Matrix& psi, Index l, const std::vector<Index>& e_grid,
                                  int trials, std::uint64_t seed, const SolverParams& params) {
    require(trials >= 1, "erasure_sweep: need at least one trial");
    const double norm = x.norm();
    require(norm > 0.0, "erasure_sweep: zero signal");
    std::vector<double> mean(e_grid.size(), 0.0);
    for (int t = 0; t < trials; ++t) {
        const auto tt = static_cast<std::uint64_t>(t);
        const auto code = erasure_encode(x, l, derive_seed(seed, {tt, 0}));
        std::vector<Index> order(static_cast<std::size_t>(l));
        std::iota(order.begin(), order.end(), Index{0});
        Rng rng(derive_seed(seed, {tt, 1}));
        rng.shuffle(order.begin(), order.end());
        for (std::size_t g = 0; g < e_grid.size(); ++g) {
            const auto ch = erase_prefix(order, e_grid[g]);
            Vector yk(static_cast<Index>(ch.kept.size()));
            for (std::size_t i = 0; i < ch.kept.size(); ++i) yk(static_cast<Index>(i)) = code.y(ch.kept[i]);
            const Vector est = erasure_decode(yk, ch.kept, code.phi.entries, psi, params);
            mean[g] += (est - x).norm() / norm / trials;
        }
    }
    return mean;
}

Vector power_law_coefficients(Index n, double alpha, std::uint64_t seed) {
    require(n >= 1 && alpha > 0.0, "power_law_coefficients: need n >= 1 and alpha > 0");
    Rng rng(seed);
    std::vector<Index> pos(static_cast<std::size_t>(n));
    std::iota(pos.begin(), pos.end(), Index{0});
    rng.shuffle(pos.begin(), pos.end());
    Vector c(n);
    for (Index i = 0; i < n; ++i)
        c(pos[static_cast<std::size_t>(i)]) = rng.sign() * std::pow(static_cast<double>(i + 1), -alpha);
    return c;
}

}  // namespace csnet

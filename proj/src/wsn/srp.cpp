#include "csnet/wsn/srp.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/rng.hpp"
#include "csnet/core/sensing.hpp"

#include <cmath>

namespace csnet {

SrpResult srp_run(const SensorNetwork& net, const Vector& x, int s, Index m, std::uint64_t seed) {
    require(s >= 1, "srp_run: s must be >= 1");
    require(m >= 1, "srp_run: m must be positive");
    require(m <= net.n, "srp_run: m must not exceed the node count");
    require(x.size() == net.n, "srp_run: signal length must equal node count");

    SrpResult out;
    out.phi = gen_sensing_matrix(Recipe::SparseRandom, m, net.n, derive_seed(seed, {1}), s).entries;
    Rng rng(derive_seed(seed, {2}));
    for (auto h : rng.choose(net.n, m)) out.holders.push_back(static_cast<int>(h));
    out.y = out.phi * x;
    out.contributors.assign(static_cast<std::size_t>(m), 0);
    for (Index j = 0; j < m; ++j) {
        const int holder = out.holders[static_cast<std::size_t>(j)];
        const auto dist = bfs_distances(net, holder);
        for (Index i = 0; i < net.n; ++i) {
            if (out.phi(j, i) == 0.0) continue;
            ++out.contributors[static_cast<std::size_t>(j)];
            ++out.cost.dissemination_messages;
            out.cost.dissemination_tx += dist[static_cast<std::size_t>(i)];
        }
        out.cost.query_tx += 2L * net.hops[static_cast<std::size_t>(holder)];
    }
    return out;
}

double srp_optimal_s(double n, double peak, double k) {
    require(n > 1.0, "srp_optimal_s: n must exceed 1");
    require(peak > 0.0 && peak <= 1.0, "srp_optimal_s: peak ratio must lie in (0, 1]");
    require(k >= 1.0, "srp_optimal_s: k must be >= 1");
    return n / (peak * k * std::sqrt(std::log(n)));
}

double peak_ratio(const Vector& x) {
    const double nrm = x.norm();
    require(nrm > 0.0, "peak_ratio: zero signal");
    return x.cwiseAbs().maxCoeff() / nrm;
}

}  // namespace csnet

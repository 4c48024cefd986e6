#include "csnet/physim/mimo.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/rng.hpp"
#include "csnet/core/sensing.hpp"

#include <algorithm>
#include <cmath>

namespace csnet {

Index VirtualChannel::nonzeros() const {
    Index count = 0;
    for (Index i = 0; i < h.size(); ++i) count += h(i) != 0.0 ? 1 : 0;
    return count;
}

namespace {

void check_dims(const VirtualDims& d) {
    require(d.receive >= 1 && d.transmit >= 1 && d.delays >= 1 && d.doppler >= 0,
            "virtual channel: dimensions must be positive");
}

}  // namespace

Index virtual_index(const VirtualDims& dims, Index aoa, Index aod, Index delay, Index doppler) {
    require(aoa >= 0 && aoa < dims.receive && aod >= 0 && aod < dims.transmit && delay >= 0 &&
                delay < dims.delays && doppler >= -dims.doppler && doppler <= dims.doppler,
            "virtual_index: coordinate out of range");
    return ((aoa * dims.transmit + aod) * dims.delays + delay) * (2 * dims.doppler + 1) + doppler + dims.doppler;
}

VirtualChannel planted_channel(const VirtualDims& dims, Index d, std::uint64_t seed) {
    check_dims(dims);
    require(d >= 0 && d <= dims.size(), "planted_channel: need 0 <= d <= D");
    Rng rng(seed);
    VirtualChannel c{dims, Vector::Zero(dims.size())};
    for (auto i : rng.choose(dims.size(), d)) c.h(i) = rng.sign() * rng.uniform(0.5, 1.5);
    return c;
}

VirtualChannel binned_physical_channel(const VirtualDims& dims, Index paths, std::uint64_t seed) {
    check_dims(dims);
    require(paths >= 0, "binned_physical_channel: path count must be nonnegative");
    Rng rng(seed);
    VirtualChannel c{dims, Vector::Zero(dims.size())};
    auto bin = [](double v, Index count) {
        const auto b = static_cast<Index>(std::floor(v * static_cast<double>(count) + 0.5));
        return b % count;
    };
    for (Index p = 0; p < paths; ++p) {
        const Index aoa = bin(rng.uniform(), dims.receive);
        const Index aod = bin(rng.uniform(), dims.transmit);
        const auto delay = std::min<Index>(static_cast<Index>(rng.uniform(0.0, static_cast<double>(dims.delays))),
                                           dims.delays - 1);
        const double nu = rng.uniform(-static_cast<double>(dims.doppler) - 0.5, static_cast<double>(dims.doppler) + 0.5);
        const Index dop = std::clamp<Index>(static_cast<Index>(std::lround(nu)), -dims.doppler, dims.doppler);
        c.h(virtual_index(dims, aoa, aod, delay, dop)) += rng.sign() * rng.uniform(0.5, 1.5);
    }
    return c;
}

MimoEstimate mimo_estimate(const VirtualChannel& channel, Index m_train, std::uint64_t seed,
                           const SolverParams& params) {
    check_dims(channel.dims);
    const Index big_d = channel.size();
    require(channel.h.size() == big_d, "mimo_estimate: coefficient count must equal D");
    require(m_train >= 1 && m_train <= big_d, "mimo_estimate: need 1 <= m_train <= D");
    const Matrix phi = gen_sensing_matrix(Recipe::Gaussian, m_train, big_d, seed).entries;
    MimoEstimate out;
    out.training = phi * channel.h;
    const auto r = recover(phi, out.training, params);
    out.channel = {channel.dims, r.estimate};
    out.converged = r.converged;
    return out;
}

}  // namespace csnet

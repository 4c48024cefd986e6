#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace csnet {

/// Mixes a 64-bit value (splitmix64 finalizer).
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Derives an independent stream seed from a master seed and a list of indices.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> indices) noexcept;

/// Seeded generator whose draws are identical on every platform.
///
/// std::mt19937_64 output is fully specified by the standard; the
/// <random> distributions are not, so the conversions live here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer on [0, bound).
    std::uint64_t below(std::uint64_t bound);

    double normal();
    double sign() { return (engine_() >> 63) != 0 ? 1.0 : -1.0; }
    bool bernoulli(double p) { return uniform() < p; }

    /// k distinct values from [0, n), in draw order.
    std::vector<std::int64_t> choose(std::int64_t n, std::int64_t k);

    template <class It>
    void shuffle(It first, It last) {
        const auto count = last - first;
        for (auto i = count - 1; i > 0; --i) {
            const auto j = static_cast<decltype(i)>(below(static_cast<std::uint64_t>(i) + 1));
            std::swap(first[i], first[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace csnet

#include "csnet/core/rng.hpp"

#include "csnet/core/error.hpp"

#include <cmath>
#include <numbers>
#include <unordered_set>

namespace csnet {

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> indices) noexcept {
    std::uint64_t h = mix64(master);
    for (auto i : indices) h = mix64(h ^ mix64(i + 0x632be59bd9b4e019ULL));
    return h;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    require(bound > 0, "Rng::below: bound must be positive");
    // Rejection sampling keeps the draw unbiased.
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

std::vector<std::int64_t> Rng::choose(std::int64_t n, std::int64_t k) {
    require(k >= 0 && k <= n, "Rng::choose: need 0 <= k <= n");
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(k));
    if (2 * k > n) {
        std::vector<std::int64_t> all(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
        // Partial Fisher-Yates.
        for (std::int64_t i = 0; i < k; ++i) {
            const auto j = i + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(n - i)));
            std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
            out.push_back(all[static_cast<std::size_t>(i)]);
        }
        return out;
    }
    std::unordered_set<std::int64_t> seen;
    while (static_cast<std::int64_t>(out.size()) < k) {
        const auto v = static_cast<std::int64_t>(below(static_cast<std::uint64_t>(n)));
        if (seen.insert(v).second) out.push_back(v);
    }
    return out;
}

}  // namespace csnet

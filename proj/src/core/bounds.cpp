#include "csnet/core/bounds.hpp"

#include "csnet/core/error.hpp"

#include <cmath>

namespace csnet {

namespace {

double need(const std::optional<double>& v, const char* name, const char* kind) {
    require(v.has_value(), std::string("sample_bound(") + kind + "): missing parameter " + name);
    return *v;
}

}  // namespace

double sample_bound(BoundKind kind, const BoundParams& p) {
    require(p.c > 0.0, "sample_bound: constant c must be positive");
    switch (kind) {
        case BoundKind::Spark:
            return 2.0 * need(p.k, "k", "spark");
        case BoundKind::Mip: {
            const double mu = need(p.mu, "mu", "mip");
            return p.c * mu * mu * need(p.k, "k", "mip") * std::log(need(p.n, "n", "mip"));
        }
        case BoundKind::Rip: {
            const double k = need(p.k, "k", "rip");
            return p.c * k * std::log(need(p.n, "n", "rip") / k);
        }
        case BoundKind::Srp: {
            const double k = need(p.k, "k", "srp");
            const double big_m = need(p.peak_ratio, "peak_ratio", "srp");
            return p.c * need(p.s, "s", "srp") * big_m * big_m * k * k * std::log(need(p.n, "n", "srp"));
        }
        case BoundKind::Mc: {
            const double mu = need(p.mu, "mu", "mc");
            const double n = need(p.n, "n", "mc");
            const double ln = std::log(n);
            return p.c * std::pow(mu, 4) * n * ln * ln;
        }
    }
    fail(ErrorKind::InvalidParameter, "sample_bound: unknown kind");
}

}  // namespace csnet

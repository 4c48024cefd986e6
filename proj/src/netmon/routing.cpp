#include "csnet/netmon/routing.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/linalg.hpp"
#include "csnet/core/rng.hpp"
#include "csnet/core/sensing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace csnet {

RoutingMatrix build_routing(const std::vector<LinkSet>& paths, Index n_links) {
    require(n_links >= 1, "build_routing: need at least one link");
    RoutingMatrix r;
    r.entries = Matrix::Zero(static_cast<Index>(paths.size()), n_links);
    r.path_link_sets.reserve(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
        require(!paths[i].empty(), "build_routing: path " + std::to_string(i) + " is empty");
        LinkSet links = paths[i];
        std::sort(links.begin(), links.end());
        links.erase(std::unique(links.begin(), links.end()), links.end());
        for (int l : links) {
            require(l >= 0 && l < n_links, "build_routing: link index out of range");
            r.entries(static_cast<Index>(i), l) = 1.0;
        }
        r.path_link_sets.push_back(std::move(links));
    }
    return r;
}

RoutingMatrix random_routing(Index n_paths, Index n_links, int degree, std::uint64_t seed) {
    require(n_paths >= 1 && n_links >= 1, "random_routing: sizes must be positive");
    require(degree >= 1 && degree <= n_paths, "random_routing: need 1 <= degree <= paths");
    for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
        Rng rng(derive_seed(seed, {attempt}));
        std::vector<LinkSet> paths(static_cast<std::size_t>(n_paths));
        for (Index l = 0; l < n_links; ++l)
            for (auto p : rng.choose(n_paths, degree)) paths[static_cast<std::size_t>(p)].push_back(static_cast<int>(l));
        if (std::none_of(paths.begin(), paths.end(), [](const LinkSet& p) { return p.empty(); }))
            return build_routing(paths, n_links);
    }
    fail(ErrorKind::GenerationFailure, "random_routing: could not cover every path");
}

ExpanderReport expander_check(const RoutingMatrix& routing, int s, double eps) {
    const Index links = routing.links();
    const Index paths = routing.paths();
    require(s >= 1, "expander_check: s must be positive");
    require(eps >= 0.0 && eps < 1.0, "expander_check: eps must lie in [0, 1)");
    if (links > 24) fail(ErrorKind::ResourceLimit, "expander_check: at most 24 links can be enumerated");

    ExpanderReport report;
    const Vector degrees = routing.entries.colwise().sum();
    const int d = static_cast<int>(std::lround(degrees(0)));
    for (Index j = 1; j < links; ++j) {
        if (std::lround(degrees(j)) != d) {
            report.reason = "not left-regular: link 0 has degree " + std::to_string(d) + ", link " +
                            std::to_string(j) + " has degree " + std::to_string(std::lround(degrees(j)));
            return report;
        }
    }
    report.degree = d;

    const std::size_t words = static_cast<std::size_t>((paths + 63) / 64);
    std::vector<std::vector<std::uint64_t>> nbr(static_cast<std::size_t>(links), std::vector<std::uint64_t>(words, 0));
    for (Index j = 0; j < links; ++j)
        for (Index i = 0; i < paths; ++i)
            if (routing.entries(i, j) != 0.0)
                nbr[static_cast<std::size_t>(j)][static_cast<std::size_t>(i / 64)] |= std::uint64_t{1} << (i % 64);

    std::vector<std::uint64_t> acc(words);
    const int max_size = static_cast<int>(std::min<Index>(s, links));
    for (int size = 1; size <= max_size && report.witness.empty(); ++size) {
        const double need = (1.0 - eps) * d * size - 1e-9;
        for_each_combination(static_cast<int>(links), size, [&](std::span<const int> subset) {
            std::fill(acc.begin(), acc.end(), 0);
            for (int j : subset)
                for (std::size_t w = 0; w < words; ++w) acc[w] |= nbr[static_cast<std::size_t>(j)][w];
            int count = 0;
            for (auto w : acc) count += std::popcount(w);
            if (count < need) {
                report.witness.assign(subset.begin(), subset.end());
                report.reason = "subset of size " + std::to_string(size) + " reaches only " + std::to_string(count) +
                                " paths";
                return false;
            }
            return true;
        });
    }
    report.expander = report.witness.empty();
    return report;
}

RecoveryResult monitor_links(const RoutingMatrix& routing, const Vector& y, const SolverParams& params,
                             LinkMetric metric) {
    require(y.size() == routing.paths(), "monitor_links: one measurement per path required");
    Vector target = y;
    if (metric == LinkMetric::LossRate) {
        require((y.array() >= 0.0).all() && (y.array() < 1.0).all(), "monitor_links: loss rates must lie in [0, 1)");
        target = (-(1.0 - y.array()).log()).matrix();
    }
    const Vector norms = column_norms(routing.entries);
    RecoveryResult r = recover(normalize_columns(routing.entries), target, params);
    for (Index j = 0; j < r.estimate.size(); ++j) r.estimate(j) = norms(j) > 0 ? r.estimate(j) / norms(j) : 0.0;
    r.residual_norm = (target - routing.entries * r.estimate).norm();
    if (metric == LinkMetric::LossRate) r.estimate = (1.0 - (-r.estimate.array()).exp()).matrix();
    return r;
}

}  // namespace csnet

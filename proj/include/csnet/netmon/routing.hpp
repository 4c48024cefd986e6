#pragma once

#include "csnet/core/types.hpp"
#include "csnet/solvers/recover.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace csnet {

using LinkSet = std::vector<int>;

/// Path-by-link incidence matrix: entry (i, j) is 1 iff link j lies on path i.
struct RoutingMatrix {
    Matrix entries;
    std::vector<LinkSet> path_link_sets;

    Index paths() const { return entries.rows(); }
    Index links() const { return entries.cols(); }
};

RoutingMatrix build_routing(const std::vector<LinkSet>& paths, Index n_links);

/// Each link joins exactly `degree` distinct paths chosen uniformly; redrawn
/// until no path is empty.
RoutingMatrix random_routing(Index n_paths, Index n_links, int degree, std::uint64_t seed);

struct ExpanderReport {
    bool expander = false;
    /// Common left degree; 0 when the links have differing degrees.
    int degree = 0;
    /// A link subset violating the expansion inequality, if one was found.
    std::vector<int> witness;
    std::string reason;
};

/// Exhaustive check that the link-to-path bipartite graph is left-regular and
/// satisfies |N(S)| >= (1 - eps) d |S| for every link subset with |S| <= s.
ExpanderReport expander_check(const RoutingMatrix& routing, int s, double eps);

enum class LinkMetric {
    /// Metrics that add along a path, such as delay.
    Additive,
    /// Loss rates; mapped through -log(1 - p) before recovery and back after.
    LossRate,
};

/// Recovers sparse link metrics from path measurements. The routing columns are
/// normalized for the solver and the estimate is rescaled to link units.
RecoveryResult monitor_links(const RoutingMatrix& routing, const Vector& y, const SolverParams& params,
                             LinkMetric metric = LinkMetric::Additive);

}  // namespace csnet

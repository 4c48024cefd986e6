#pragma once

#include "csnet/core/types.hpp"
#include "csnet/netmon/routing.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace csnet {

/// Weighted graph with one vertex per path. The weight between two paths is
/// the Jaccard index of their link sets.
struct MeasurementGraph {
    Matrix weights;

    Index size() const { return weights.rows(); }
};

MeasurementGraph measurement_graph(const std::vector<LinkSet>& paths);

/// Orthonormal eigenbasis of the weighted graph Laplacian D - W (self weights
/// ignored), ordered by ascending eigenvalue. Each column is signed so that its
/// first entry of largest magnitude is positive.
BasisMatrix graph_basis(const MeasurementGraph& graph);

/// `count` distinct path indices drawn uniformly, returned sorted.
Support select_paths(Index n_paths, Index count, std::uint64_t seed);

/// Estimates every path metric from the measured subset by l1 recovery of the
/// basis coefficients. lambda <= 0 selects 1e-3 * max|(A B)^T y_s|. With
/// `debias` the coefficients are refit by least squares on their support.
Vector monitor_paths(const Vector& y_s, const Support& selected, const BasisMatrix& basis, double lambda,
                     bool debias = true);

/// Directed network: node count plus one (from, to) pair per link.
struct LinkTopology {
    Index nodes = 0;
    std::vector<std::pair<int, int>> links;
};

/// An 11-node, 15-edge backbone modelled on a US research network, each edge
/// contributing one link per direction.
LinkTopology backbone_topology();

/// Hop-count shortest route from `from` to `to` as link indices; ties go to the
/// lowest-numbered predecessor.
LinkSet shortest_route(const LinkTopology& topology, int from, int to);

struct PathMonitoringParams {
    Index n_paths = 30;
    Index per_step = 3;
    int steps = 50;
    /// Relative amplitude of the slow per-link delay oscillation.
    double drift = 0.1;
    double lambda = 0.0;
};

struct PathMonitoringRun {
    std::vector<double> true_mean;
    std::vector<double> estimated_mean;
    /// |estimated - true| / true per step.
    std::vector<double> relative_error;
    double mean_relative_error = 0.0;
};

/// Tracks the mean end-to-end delay of random source-destination paths while
/// measuring only a few paths per step. Each path keeps its most recent
/// measurement; the full delay vector is re-estimated every step.
PathMonitoringRun path_monitoring_case_study(const PathMonitoringParams& params, std::uint64_t seed);

}  // namespace csnet

#pragma once

#include "csnet/core/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace csnet {

enum class Topology { Grid, RandomGeometric };

/// Sensor field with a breadth-first shortest-path tree rooted at node 0,
/// the base station.
struct SensorNetwork {
    Index n = 0;
    /// n x 2 positions.
    Matrix coords;
    /// Sorted neighbour lists.
    std::vector<std::vector<int>> adjacency;
    /// Tree parent per node; -1 for the root.
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    std::vector<int> hops;
    /// Nodes in breadth-first order (root first).
    std::vector<int> bfs_order;
    /// Messages sent per node during the last simulation.
    std::vector<long> tx_count;

    std::size_t edge_count() const;
    /// Nodes in the subtree of each node, itself included.
    std::vector<long> subtree_sizes() const;
    void reset_counters();
};

/// Grid: nodes on a ceil(sqrt(n))-wide lattice filled row by row, 4-neighbour
/// links, root at the corner. RandomGeometric: uniform points in the unit
/// square linked within `radius`, redrawn until connected (at most 100 tries).
SensorNetwork build_network(Index n, Topology topology, std::uint64_t seed, double radius = 0.0);

/// Network from an explicit undirected edge list. Coordinates default to zero.
SensorNetwork network_from_edges(Index n, const std::vector<std::pair<int, int>>& edges, Matrix coords = {});

/// Hop distances from `source` to every node.
std::vector<int> bfs_distances(const SensorNetwork& net, int source);

/// Text form: node count, one "x y" line per node, then one "i j" line per edge.
void write_network(std::ostream& out, const SensorNetwork& net);
SensorNetwork read_network(std::istream& in);

}  // namespace csnet

#include "csnet/wsn/network.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/rng.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <ostream>

namespace csnet {

std::size_t SensorNetwork::edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adjacency) twice += a.size();
    return twice / 2;
}

std::vector<long> SensorNetwork::subtree_sizes() const {
    std::vector<long> size(static_cast<std::size_t>(n), 1);
    for (auto it = bfs_order.rbegin(); it != bfs_order.rend(); ++it)
        if (parent[static_cast<std::size_t>(*it)] >= 0)
            size[static_cast<std::size_t>(parent[static_cast<std::size_t>(*it)])] += size[static_cast<std::size_t>(*it)];
    return size;
}

void SensorNetwork::reset_counters() { tx_count.assign(static_cast<std::size_t>(n), 0); }

namespace {

// Fills the tree fields; returns false when the graph is disconnected.
bool build_tree(SensorNetwork& net) {
    const auto n = static_cast<std::size_t>(net.n);
    for (auto& a : net.adjacency) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    net.parent.assign(n, -1);
    net.hops.assign(n, -1);
    net.children.assign(n, {});
    net.bfs_order.clear();
    net.reset_counters();
    if (n == 0) return true;
    std::deque<int> queue{0};
    net.hops[0] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        net.bfs_order.push_back(u);
        for (int v : net.adjacency[static_cast<std::size_t>(u)]) {
            if (net.hops[static_cast<std::size_t>(v)] >= 0) continue;
            net.hops[static_cast<std::size_t>(v)] = net.hops[static_cast<std::size_t>(u)] + 1;
            net.parent[static_cast<std::size_t>(v)] = u;
            net.children[static_cast<std::size_t>(u)].push_back(v);
            queue.push_back(v);
        }
    }
    return net.bfs_order.size() == n;
}

void link(SensorNetwork& net, int a, int b) {
    net.adjacency[static_cast<std::size_t>(a)].push_back(b);
    net.adjacency[static_cast<std::size_t>(b)].push_back(a);
}

}  // namespace

SensorNetwork build_network(Index n, Topology topology, std::uint64_t seed, double radius) {
    require(n >= 1, "build_network: n must be positive");
    SensorNetwork net;
    net.n = n;
    net.coords.resize(n, 2);
    if (topology == Topology::Grid) {
        const auto side = static_cast<Index>(std::ceil(std::sqrt(static_cast<double>(n))));
        net.adjacency.assign(static_cast<std::size_t>(n), {});
        for (Index i = 0; i < n; ++i) {
            net.coords(i, 0) = static_cast<double>(i % side);
            net.coords(i, 1) = static_cast<double>(i / side);
            if ((i % side) + 1 < side && i + 1 < n) link(net, static_cast<int>(i), static_cast<int>(i + 1));
            if (i + side < n) link(net, static_cast<int>(i), static_cast<int>(i + side));
        }
        build_tree(net);
        return net;
    }
    require(radius > 0.0, "build_network: random_geometric needs a positive radius");
    constexpr int kMaxAttempts = 100;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(attempt)}));
        for (Index i = 0; i < n; ++i) {
            net.coords(i, 0) = rng.uniform();
            net.coords(i, 1) = rng.uniform();
        }
        net.adjacency.assign(static_cast<std::size_t>(n), {});
        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j)
                if ((net.coords.row(i) - net.coords.row(j)).norm() <= radius)
                    link(net, static_cast<int>(i), static_cast<int>(j));
        if (build_tree(net)) return net;
    }
    fail(ErrorKind::GenerationFailure, "build_network: random geometric graph disconnected after 100 draws");
}

SensorNetwork network_from_edges(Index n, const std::vector<std::pair<int, int>>& edges, Matrix coords) {
    require(n >= 1, "network_from_edges: n must be positive");
    SensorNetwork net;
    net.n = n;
    net.coords = coords.size() ? std::move(coords) : Matrix::Zero(n, 2);
    require(net.coords.rows() == n && net.coords.cols() == 2, "network_from_edges: coords must be n x 2");
    net.adjacency.assign(static_cast<std::size_t>(n), {});
    for (const auto& [a, b] : edges) {
        require(a >= 0 && b >= 0 && a < n && b < n && a != b, "network_from_edges: bad edge");
        link(net, a, b);
    }
    if (!build_tree(net)) fail(ErrorKind::InvalidParameter, "network_from_edges: graph is disconnected");
    return net;
}

std::vector<int> bfs_distances(const SensorNetwork& net, int source) {
    std::vector<int> dist(static_cast<std::size_t>(net.n), -1);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : net.adjacency[static_cast<std::size_t>(u)])
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

void write_network(std::ostream& out, const SensorNetwork& net) {
    out << net.n << '\n';
    for (Index i = 0; i < net.n; ++i) out << net.coords(i, 0) << ' ' << net.coords(i, 1) << '\n';
    for (Index i = 0; i < net.n; ++i)
        for (int j : net.adjacency[static_cast<std::size_t>(i)])
            if (j > i) out << i << ' ' << j << '\n';
}

SensorNetwork read_network(std::istream& in) {
    Index n = 0;
    if (!(in >> n) || n < 1) fail(ErrorKind::InvalidParameter, "read_network: bad node count");
    Matrix coords(n, 2);
    for (Index i = 0; i < n; ++i)
        if (!(in >> coords(i, 0) >> coords(i, 1))) fail(ErrorKind::InvalidParameter, "read_network: truncated coordinates");
    std::vector<std::pair<int, int>> edges;
    int a = 0;
    int b = 0;
    while (in >> a >> b) edges.emplace_back(a, b);
    return network_from_edges(n, edges, std::move(coords));
}

}  // namespace csnet

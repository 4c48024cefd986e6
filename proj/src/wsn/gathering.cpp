#include "csnet/wsn/gathering.hpp"

#include "csnet/core/error.hpp"

#include <numeric>

namespace csnet {

long CollectionResult::total_tx() const { return std::accumulate(tx_counts.begin(), tx_counts.end(), 0L); }

namespace {

void check_dims(const SensorNetwork& net, const Vector& x, const Matrix& phi) {
    require(x.size() == net.n, "collect: signal length must equal node count");
    require(phi.cols() == net.n, "collect: phi must have one column per node");
    require(phi.rows() >= 1, "collect: phi needs at least one row");
}

}  // namespace

CollectionResult cdg_collect(SensorNetwork& net, const Vector& x, const Matrix& phi) {
    check_dims(net, x, phi);
    net.reset_counters();
    CollectionResult out;
    const Index m = phi.rows();
    out.partial = Matrix::Zero(m, net.n);
    out.y.resize(m);
    for (Index j = 0; j < m; ++j) {
        // Children finish before their parent when walking BFS order backwards.
        Vector acc = Vector::Zero(net.n);
        for (auto it = net.bfs_order.rbegin(); it != net.bfs_order.rend(); ++it) {
            const int i = *it;
            acc(i) += phi(j, i) * x(i);
            const int p = net.parent[static_cast<std::size_t>(i)];
            if (p >= 0) {
                out.partial(j, i) = acc(i);
                acc(p) += acc(i);
                ++net.tx_count[static_cast<std::size_t>(i)];
            }
        }
        out.y(j) = acc(0);
    }
    out.tx_counts = net.tx_count;
    return out;
}

CollectionResult hybrid_collect(SensorNetwork& net, const Vector& x, const Matrix& phi) {
    check_dims(net, x, phi);
    net.reset_counters();
    const Index m = phi.rows();
    const auto sizes = net.subtree_sizes();
    CollectionResult out;
    out.partial = Matrix::Zero(m, net.n);
    // Sum of phi(:, i) x_i delivered to node i in compressed form, and the raw
    // readings node i holds (its own plus those relayed by raw children).
    Matrix compressed = Matrix::Zero(m, net.n);
    std::vector<std::vector<int>> raw(static_cast<std::size_t>(net.n));
    for (auto it = net.bfs_order.rbegin(); it != net.bfs_order.rend(); ++it) {
        const int i = *it;
        auto& held = raw[static_cast<std::size_t>(i)];
        held.push_back(i);
        const int p = net.parent[static_cast<std::size_t>(i)];
        if (p < 0) continue;
        if (sizes[static_cast<std::size_t>(i)] < m) {
            net.tx_count[static_cast<std::size_t>(i)] += static_cast<long>(held.size());
            auto& up = raw[static_cast<std::size_t>(p)];
            up.insert(up.end(), held.begin(), held.end());
            compressed.col(p) += compressed.col(i);
        } else {
            Vector sum = compressed.col(i);
            for (int r : held) sum += phi.col(r) * x(r);
            out.partial.col(i) = sum;
            compressed.col(p) += sum;
            net.tx_count[static_cast<std::size_t>(i)] += m;
        }
        held.clear();
    }
    out.y = compressed.col(0);
    for (int r : raw[0]) out.y += phi.col(r) * x(r);
    out.tx_counts = net.tx_count;
    return out;
}

CollectionResult conventional_collect(SensorNetwork& net, const Vector& x) {
    require(x.size() == net.n, "collect: signal length must equal node count");
    net.reset_counters();
    const auto sizes = net.subtree_sizes();
    for (Index i = 1; i < net.n; ++i) net.tx_count[static_cast<std::size_t>(i)] = sizes[static_cast<std::size_t>(i)];
    CollectionResult out;
    out.y = x;
    out.tx_counts = net.tx_count;
    return out;
}

}  // namespace csnet

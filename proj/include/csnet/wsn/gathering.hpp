#pragma once

#include "csnet/core/types.hpp"
#include "csnet/wsn/network.hpp"

#include <vector>

namespace csnet {

struct CollectionResult {
    /// Measurements available at the base station.
    Vector y;
    std::vector<long> tx_counts;
    /// partial(j, i): value node i forwards to its parent in round j
    /// (compressive modes); empty for raw forwarding.
    Matrix partial;
    long total_tx() const;
};

/// Compressive data gathering: in round j every sensor adds phi(j, i) x_i to
/// the sums received from its children and forwards the result, so the base
/// station ends with y = phi x. Each sensor sends exactly m messages; the base
/// station sends none.
CollectionResult cdg_collect(SensorNetwork& net, const Vector& x, const Matrix& phi);

/// Hybrid scheme: a sensor whose subtree holds fewer than m readings relays
/// them raw; larger subtrees switch to compressive aggregation. Sensor i sends
/// min(subtree size, m) messages. The base station recovers y = phi x.
CollectionResult hybrid_collect(SensorNetwork& net, const Vector& x, const Matrix& phi);

/// Every reading relayed raw to the base station along the tree; cost is the
/// sum of hop counts.
CollectionResult conventional_collect(SensorNetwork& net, const Vector& x);

}  // namespace csnet

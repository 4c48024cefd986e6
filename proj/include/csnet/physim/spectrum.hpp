#pragma once

#include "csnet/core/types.hpp"
#include "csnet/solvers/recover.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace csnet {

/// Wideband signal whose dft_real coefficients are grouped into equal bands.
struct BandSignal {
    Vector x;
    Vector coefficients;
    std::vector<int> occupancy;
};

/// `occupied` of `bands` bands carry dense coefficients with magnitudes in
/// [0.5, 1.5] and random signs; n must be a multiple of bands.
BandSignal make_band_signal(Index n, Index bands, Index occupied, std::uint64_t seed);

/// Detection threshold max(3 * median |f|, 1e-3 * max |f|).
double occupancy_threshold(const Vector& coefficients);

/// Band b is occupied when one of its coefficients exceeds the threshold.
std::vector<int> band_occupancy(const Vector& coefficients, Index bands);

struct SensingReport {
    std::vector<int> occupancy;
    Vector coefficients;
    Support sampled;
    double threshold = 0.0;
    std::vector<std::string> warnings;
};

/// Keeps a random subset of round(ratio * n) Nyquist samples, recovers the
/// frequency representation over dft_real and thresholds it per band.
SensingReport spectrum_sense(const Vector& x, double ratio, std::uint64_t seed, const SolverParams& params,
                             Index bands);

/// Metropolis weights 1 / (1 + max(deg_j, deg_k)) on the edges of a
/// symmetric 0/1 adjacency matrix, with the remainder on the diagonal.
Matrix metropolis_weights(const Matrix& adjacency);

bool graph_connected(const Matrix& adjacency);

/// Rows of U are the nodes. Each iteration applies
/// u_j <- u_j + sum_k w_jk (u_k - u_j). Throws on a disconnected graph.
Matrix consensus_run(const Matrix& u0, const Matrix& adjacency, int iters);

struct ConsensusTrace {
    Matrix u;
    int iterations = 0;
    bool converged = false;
};

/// Iterates until every entry is within tol of its column mean.
ConsensusTrace consensus_until(const Matrix& u0, const Matrix& adjacency, double tol, int max_iter);

/// Adjacency matrices of common small graphs.
Matrix path_graph(Index j);
Matrix ring_graph(Index j);
Matrix star_graph(Index j);
Matrix complete_graph(Index j);
/// Erdos-Renyi G(j, p) redrawn until connected.
Matrix random_connected_graph(Index j, double p, std::uint64_t seed);

}  // namespace csnet

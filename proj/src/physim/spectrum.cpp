#include "csnet/physim/spectrum.hpp"

#include "csnet/core/basis.hpp"
#include "csnet/core/error.hpp"
#include "csnet/core/linalg.hpp"
#include "csnet/core/rng.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace csnet {

BandSignal make_band_signal(Index n, Index bands, Index occupied, std::uint64_t seed) {
    require(n >= 1 && bands >= 1 && n % bands == 0, "make_band_signal: n must be a multiple of bands");
    require(occupied >= 0 && occupied <= bands, "make_band_signal: occupied must be in [0, bands]");
    Rng rng(seed);
    const Index width = n / bands;
    BandSignal s;
    s.coefficients = Vector::Zero(n);
    s.occupancy.assign(static_cast<std::size_t>(bands), 0);
    for (auto b : rng.choose(bands, occupied)) {
        s.occupancy[static_cast<std::size_t>(b)] = 1;
        for (Index j = b * width; j < (b + 1) * width; ++j) s.coefficients(j) = rng.sign() * rng.uniform(0.5, 1.5);
    }
    s.x = dft_real_basis(n).entries * s.coefficients;
    return s;
}

double occupancy_threshold(const Vector& coefficients) {
    if (coefficients.size() == 0) return 0.0;
    const Vector abs = coefficients.cwiseAbs();
    std::vector<double> mags(abs.data(), abs.data() + abs.size());
    const double top = *std::max_element(mags.begin(), mags.end());
    const auto mid = mags.begin() + static_cast<std::ptrdiff_t>(mags.size() / 2);
    std::nth_element(mags.begin(), mid, mags.end());
    double median = *mid;
    if (mags.size() % 2 == 0) median = 0.5 * (median + *std::max_element(mags.begin(), mid));
    return std::max(3.0 * median, 1e-3 * top);
}

std::vector<int> band_occupancy(const Vector& coefficients, Index bands) {
    const Index n = coefficients.size();
    require(bands >= 1 && n % bands == 0, "band_occupancy: length must be a multiple of bands");
    const Index width = n / bands;
    const double tau = occupancy_threshold(coefficients);
    std::vector<int> occ(static_cast<std::size_t>(bands), 0);
    for (Index j = 0; j < n; ++j)
        if (std::abs(coefficients(j)) > tau) occ[static_cast<std::size_t>(j / width)] = 1;
    return occ;
}

SensingReport spectrum_sense(const Vector& x, double ratio, std::uint64_t seed, const SolverParams& params,
                             Index bands) {
    require(ratio > 0.0 && ratio <= 1.0, "spectrum_sense: ratio must be in (0, 1]");
    const Index n = x.size();
    require(n >= 1, "spectrum_sense: empty signal");
    const Index m = std::max<Index>(1, static_cast<Index>(std::lround(ratio * static_cast<double>(n))));
    SensingReport rep;
    if (m == n) {
        rep.sampled.resize(static_cast<std::size_t>(n));
        for (Index i = 0; i < n; ++i) rep.sampled[static_cast<std::size_t>(i)] = i;
    } else {
        Rng rng(seed);
        for (auto i : rng.choose(n, m)) rep.sampled.push_back(i);
        std::sort(rep.sampled.begin(), rep.sampled.end());
    }
    const Matrix a = select_rows(dft_real_basis(n).entries, rep.sampled);
    Vector y(m);
    for (Index i = 0; i < m; ++i) y(i) = x(rep.sampled[static_cast<std::size_t>(i)]);
    const auto r = recover(a, y, params);
    rep.coefficients = r.estimate;
    rep.warnings = r.warnings;
    rep.threshold = occupancy_threshold(rep.coefficients);
    rep.occupancy = band_occupancy(rep.coefficients, bands);
    const auto recovered = static_cast<Index>(r.support.size());
    if (2 * recovered > m)
        rep.warnings.push_back("spectrum_sense: " + std::to_string(m) + " samples are too few for " +
                               std::to_string(recovered) + " recovered coefficients");
    return rep;
}

namespace {

void check_adjacency(const Matrix& a) {
    require(a.rows() == a.cols() && a.rows() >= 1, "consensus: adjacency must be square");
    for (Index j = 0; j < a.rows(); ++j)
        for (Index k = 0; k < a.cols(); ++k) {
            require(a(j, k) == 0.0 || a(j, k) == 1.0, "consensus: adjacency entries must be 0 or 1");
            require(a(j, k) == a(k, j), "consensus: adjacency must be symmetric");
        }
}

}  // namespace

bool graph_connected(const Matrix& a) {
    const Index n = a.rows();
    if (n == 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::queue<Index> q;
    q.push(0);
    seen[0] = true;
    Index count = 1;
    while (!q.empty()) {
        const Index v = q.front();
        q.pop();
        for (Index u = 0; u < n; ++u)
            if (u != v && a(v, u) != 0.0 && !seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = true;
                ++count;
                q.push(u);
            }
    }
    return count == n;
}

Matrix metropolis_weights(const Matrix& adjacency) {
    check_adjacency(adjacency);
    const Index n = adjacency.rows();
    Vector deg = Vector::Zero(n);
    for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k)
            if (j != k) deg(j) += adjacency(j, k);
    Matrix w = Matrix::Zero(n, n);
    for (Index j = 0; j < n; ++j) {
        for (Index k = 0; k < n; ++k)
            if (j != k && adjacency(j, k) != 0.0) w(j, k) = 1.0 / (1.0 + std::max(deg(j), deg(k)));
        w(j, j) = 1.0 - w.row(j).sum();
    }
    return w;
}

Matrix consensus_run(const Matrix& u0, const Matrix& adjacency, int iters) {
    require(iters >= 0, "consensus_run: iteration count must be nonnegative");
    return consensus_until(u0, adjacency, -1.0, iters).u;
}

ConsensusTrace consensus_until(const Matrix& u0, const Matrix& adjacency, double tol, int max_iter) {
    require(u0.rows() == adjacency.rows(), "consensus: U must have one row per node");
    const Matrix w = metropolis_weights(adjacency);
    require(graph_connected(adjacency), "consensus: graph is disconnected");
    const Eigen::RowVectorXd mean = u0.colwise().mean();
    auto settled = [&](const Matrix& u) {
        return tol >= 0.0 && (u.rowwise() - mean).cwiseAbs().maxCoeff() <= tol;
    };
    ConsensusTrace t;
    t.u = u0;
    t.converged = settled(t.u);
    while (!t.converged && t.iterations < max_iter) {
        t.u = w * t.u;
        ++t.iterations;
        t.converged = settled(t.u);
    }
    return t;
}

Matrix path_graph(Index j) {
    Matrix a = Matrix::Zero(j, j);
    for (Index i = 0; i + 1 < j; ++i) a(i, i + 1) = a(i + 1, i) = 1.0;
    return a;
}

Matrix ring_graph(Index j) {
    Matrix a = path_graph(j);
    if (j > 2) a(0, j - 1) = a(j - 1, 0) = 1.0;
    return a;
}

Matrix star_graph(Index j) {
    Matrix a = Matrix::Zero(j, j);
    for (Index i = 1; i < j; ++i) a(0, i) = a(i, 0) = 1.0;
    return a;
}

Matrix complete_graph(Index j) { return Matrix::Ones(j, j) - Matrix::Identity(j, j); }

Matrix random_connected_graph(Index j, double p, std::uint64_t seed) {
    require(j >= 1 && p > 0.0 && p <= 1.0, "random_connected_graph: need j >= 1 and p in (0, 1]");
    Rng rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Matrix a = Matrix::Zero(j, j);
        for (Index r = 0; r < j; ++r)
            for (Index c = r + 1; c < j; ++c)
                if (rng.bernoulli(p)) a(r, c) = a(c, r) = 1.0;
        if (graph_connected(a)) return a;
    }
    fail(ErrorKind::GenerationFailure, "random_connected_graph: no connected draw in 10000 attempts");
}

}  // namespace csnet

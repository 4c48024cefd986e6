#include "csnet/core/diagnostics.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/linalg.hpp"
#include "csnet/core/sensing.hpp"

#include <cmath>

namespace csnet {

double mutual_coherence(const Matrix& phi, const Matrix& psi, bool normalize) {
    require(phi.rows() == psi.rows(), "mutual_coherence: row dimensions differ");
    require(phi.size() > 0 && psi.size() > 0, "mutual_coherence: empty input");
    const Matrix inner = normalize ? Matrix(normalize_columns(phi).transpose() * normalize_columns(psi))
                                   : Matrix(phi.transpose() * psi);
    return std::sqrt(static_cast<double>(phi.rows())) * inner.cwiseAbs().maxCoeff();
}

double self_coherence(const Matrix& phi) {
    require(phi.cols() >= 2, "self_coherence: need at least two columns");
    Matrix gram = normalize_columns(phi).transpose() * normalize_columns(phi);
    gram.diagonal().setZero();
    return gram.cwiseAbs().maxCoeff();
}

namespace {

struct SparkSearch {
    Index n;
    double tol;
    int cap;
    std::optional<int> best;

    // residual holds every column projected onto the orthogonal complement of
    // the current independent set, whose largest index is `last`.
    void descend(const Matrix& residual, Index last, int depth) {
        const int bound = best ? *best - 1 : cap;
        if (depth + 1 > bound) return;
        for (Index j = last + 1; j < n; ++j) {
            if (residual.col(j).norm() <= tol) {
                best = depth + 1;
                return;
            }
        }
        if (depth + 2 > bound) return;
        for (Index j = last + 1; j < n; ++j) {
            const int limit = best ? *best - 1 : cap;
            if (depth + 2 > limit) return;
            const Vector q = residual.col(j).normalized();
            Matrix next = residual - q * (q.transpose() * residual);
            descend(next, j, depth + 1);
        }
    }
};

}  // namespace

std::optional<int> spark_bruteforce(const Matrix& phi, int max_cols) {
    require(max_cols >= 1, "spark_bruteforce: max_cols must be positive");
    require(phi.cols() >= 1, "spark_bruteforce: empty matrix");
    const double scale = column_norms(phi).maxCoeff();
    SparkSearch search{phi.cols(), kZeroTolerance * scale, std::min<int>(max_cols, static_cast<int>(phi.cols())), {}};
    search.descend(phi, -1, 0);
    return search.best;
}

double rip_constant_bruteforce(const Matrix& phi, int k) {
    require(k >= 1 && k <= phi.cols(), "rip_constant_bruteforce: need 1 <= k <= n");
    if (binomial(static_cast<int>(phi.cols()), k) > 1'000'000)
        fail(ErrorKind::ResourceLimit, "rip_constant_bruteforce: C(n, k) exceeds 1e6 subsets");
    const Matrix gram = phi.transpose() * phi;
    double delta = 0.0;
    Matrix sub(k, k);
    Eigen::SelfAdjointEigenSolver<Matrix> es;
    for_each_combination(static_cast<int>(phi.cols()), k, [&](std::span<const int> s) {
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) sub(a, b) = gram(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]);
        es.compute(sub, Eigen::EigenvaluesOnly);
        const auto& ev = es.eigenvalues();
        delta = std::max({delta, 1.0 - ev.minCoeff(), ev.maxCoeff() - 1.0});
        return true;
    });
    return delta;
}

DiagnosticsResult diagnose(const Matrix& phi, const Matrix& psi, const std::vector<int>& rip_orders,
                           int spark_max_cols) {
    DiagnosticsResult out;
    out.mu = mutual_coherence(phi, psi);
    out.spark = spark_bruteforce(phi, spark_max_cols);
    for (int k : rip_orders) out.delta_k[k] = rip_constant_bruteforce(phi, k);
    return out;
}

}  // namespace csnet

#include "csnet/core/linalg.hpp"

#include "csnet/core/error.hpp"

#include <cmath>
#include <vector>

namespace csnet {

Matrix select_columns(const Matrix& a, const Support& cols) {
    Matrix out(a.rows(), static_cast<Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Index>(j)) = a.col(cols[j]);
    return out;
}

Matrix select_rows(const Matrix& a, const Support& rows) {
    Matrix out(static_cast<Index>(rows.size()), a.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = a.row(rows[i]);
    return out;
}

Vector least_squares(const Matrix& a, const Vector& y) {
    require(a.rows() == y.size(), "least_squares: dimension mismatch");
    if (a.cols() == 0) return Vector(0);
    return a.completeOrthogonalDecomposition().solve(y);
}

Matrix least_squares(const Matrix& a, const Matrix& y) {
    require(a.rows() == y.rows(), "least_squares: dimension mismatch");
    if (a.cols() == 0) return Matrix(0, y.cols());
    return a.completeOrthogonalDecomposition().solve(y);
}

double gram_spectral_norm(const Matrix& a, int max_iter, double tol) {
    if (a.size() == 0) return 0.0;
    const Index small = std::min(a.rows(), a.cols());
    if (small <= 600) {
        const Matrix gram = a.rows() <= a.cols() ? Matrix(a * a.transpose()) : Matrix(a.transpose() * a);
        Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
        return std::max(0.0, es.eigenvalues().maxCoeff());
    }
    Vector v(a.cols());
    for (Index i = 0; i < v.size(); ++i) v(i) = 1.0 + 0.5 * std::sin(static_cast<double>(i) + 1.0);
    v.normalize();
    double lambda = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        Vector w = a.transpose() * (a * v);
        const double next = w.norm();
        if (next == 0.0) return 0.0;
        v = w / next;
        const bool done = std::abs(next - lambda) <= tol * next;
        lambda = next;
        if (done) break;
    }
    // Power iteration approaches from below; pad so 1/L stays a safe step.
    return lambda * (1.0 + 1e-6);
}

double nuclear_norm(const Matrix& x) {
    if (x.size() == 0) return 0.0;
    Eigen::BDCSVD<Matrix> svd(x);
    return svd.singularValues().sum();
}

Matrix singular_value_threshold(const Matrix& x, double tau) {
    Eigen::BDCSVD<Matrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector shrunk = (svd.singularValues().array() - tau).max(0.0).matrix();
    return svd.matrixU() * shrunk.asDiagonal() * svd.matrixV().transpose();
}

Matrix truncated_svd(const Matrix& x, Index r) {
    require(r >= 0, "truncated_svd: rank must be nonnegative");
    Eigen::BDCSVD<Matrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Index keep = std::min<Index>(r, svd.singularValues().size());
    return svd.matrixU().leftCols(keep) * svd.singularValues().head(keep).asDiagonal() *
           svd.matrixV().leftCols(keep).transpose();
}

Index numerical_rank(const Matrix& x, double relative_tol) {
    if (x.size() == 0) return 0;
    Eigen::BDCSVD<Matrix> svd(x);
    const Vector& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    return (sv.array() > relative_tol * sv(0)).count();
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    // Saturate instead of overflowing; callers only compare against guards.
    constexpr std::uint64_t cap = std::uint64_t{1} << 62;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        const auto num = static_cast<std::uint64_t>(n - k + i);
        if (r > cap / num) return cap;
        r = r * num / static_cast<std::uint64_t>(i);
    }
    return r;
}

void for_each_combination(int n, int k, const std::function<bool(std::span<const int>)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!fn(std::span<const int>(c))) return;
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace csnet

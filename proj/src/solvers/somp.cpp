#include "csnet/solvers/somp.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/linalg.hpp"
#include "csnet/core/sensing.hpp"
#include "csnet/solvers/omp.hpp"

#include <cmath>

namespace csnet {

namespace {

// Orthonormal basis for the column space of r (singular values above a
// relative cut).
Matrix range_basis(const Matrix& r) {
    Eigen::BDCSVD<Matrix> svd(r, Eigen::ComputeThinU);
    const Vector& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return Matrix(r.rows(), 0);
    const Index keep = (sv.array() > 1e-10 * sv(0)).count();
    return svd.matrixU().leftCols(keep);
}

}  // namespace

MmvResult somp(const Matrix& phi, const Matrix& y, int k, SompRule rule) {
    require(k > 0, "somp: k must be positive");
    require(y.cols() >= 1, "somp: need at least one measurement vector");
    require(phi.rows() == y.rows(), "somp: dimension mismatch");
    const Index n = phi.cols();
    const Vector norms = column_norms(phi);
    const double stop = kResidualFloor * y.norm();
    const Index cap = std::min<Index>(k, std::min(n, phi.rows()));

    MmvResult out;
    Support support;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    Matrix r = y;
    Matrix coef;
    // Orthonormal basis of the selected span, for the rank-aware rule.
    Matrix q(phi.rows(), 0);

    while (r.norm() > stop && static_cast<Index>(support.size()) < cap) {
        Vector score = Vector::Zero(n);
        if (rule == SompRule::JointCorrelation) {
            const Matrix corr = phi.transpose() * r;
            for (Index i = 0; i < n; ++i)
                if (norms(i) > 0.0) score(i) = corr.row(i).cwiseAbs().sum() / norms(i);
        } else {
            const Matrix u = range_basis(r);
            const Matrix proj = phi - q * (q.transpose() * phi);
            const Matrix corr = phi.transpose() * u;
            for (Index i = 0; i < n; ++i) {
                const double pn = proj.col(i).norm();
                if (pn > 1e-10 * std::max(norms(i), 1e-300)) score(i) = corr.row(i).norm() / pn;
            }
        }
        Index pick = -1;
        double best = 0.0;
        for (Index i = 0; i < n; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            if (score(i) > best) {
                best = score(i);
                pick = i;
            }
        }
        if (pick < 0 || best <= 1e-14 * y.norm()) break;
        used[static_cast<std::size_t>(pick)] = 1;
        support.push_back(pick);
        Vector v = phi.col(pick) - q * (q.transpose() * phi.col(pick));
        v -= q * (q.transpose() * v);
        if (v.norm() > 0.0) {
            q.conservativeResize(Eigen::NoChange, q.cols() + 1);
            q.col(q.cols() - 1) = v.normalized();
        }
        const Matrix a = select_columns(phi, support);
        coef = least_squares(a, y);
        r = y - a * coef;
        ++out.iterations;
    }
    out.estimate = Matrix::Zero(n, y.cols());
    for (std::size_t j = 0; j < support.size(); ++j) out.estimate.row(support[j]) = coef.row(static_cast<Index>(j));
    std::sort(support.begin(), support.end());
    out.common_support = support;
    out.residual_norm = (y - phi * out.estimate).norm();
    out.converged = out.residual_norm <= stop || static_cast<Index>(support.size()) == cap;
    return out;
}

MmvResult somp_multi(const std::vector<Matrix>& phis, const std::vector<Vector>& ys, int k) {
    require(k > 0, "somp_multi: k must be positive");
    require(!phis.empty() && phis.size() == ys.size(), "somp_multi: need one matrix per signal");
    const Index n = phis.front().cols();
    const std::size_t count = phis.size();
    double y_norm = 0.0;
    Index cap = n;
    for (std::size_t j = 0; j < count; ++j) {
        require(phis[j].cols() == n, "somp_multi: all matrices need n columns");
        require(phis[j].rows() == ys[j].size(), "somp_multi: dimension mismatch");
        y_norm += ys[j].squaredNorm();
        cap = std::min(cap, phis[j].rows());
    }
    y_norm = std::sqrt(y_norm);
    cap = std::min<Index>(cap, k);
    const double stop = kResidualFloor * y_norm;

    std::vector<Vector> norms(count);
    for (std::size_t j = 0; j < count; ++j) norms[j] = column_norms(phis[j]);
    std::vector<Vector> r(ys);
    std::vector<Vector> coef(count);
    Support support;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    MmvResult out;

    auto residual_total = [&] {
        double s = 0.0;
        for (const auto& v : r) s += v.squaredNorm();
        return std::sqrt(s);
    };

    while (residual_total() > stop && static_cast<Index>(support.size()) < cap) {
        Vector score = Vector::Zero(n);
        for (std::size_t j = 0; j < count; ++j) {
            const Vector corr = phis[j].transpose() * r[j];
            for (Index i = 0; i < n; ++i)
                if (norms[j](i) > 0.0) score(i) += std::abs(corr(i)) / norms[j](i);
        }
        Index pick = -1;
        double best = 0.0;
        for (Index i = 0; i < n; ++i)
            if (!used[static_cast<std::size_t>(i)] && score(i) > best) {
                best = score(i);
                pick = i;
            }
        if (pick < 0 || best <= 1e-14 * y_norm) break;
        used[static_cast<std::size_t>(pick)] = 1;
        support.push_back(pick);
        for (std::size_t j = 0; j < count; ++j) {
            const Matrix a = select_columns(phis[j], support);
            coef[j] = least_squares(a, ys[j]);
            r[j] = ys[j] - a * coef[j];
        }
        ++out.iterations;
    }
    out.estimate = Matrix::Zero(n, static_cast<Index>(count));
    for (std::size_t j = 0; j < count; ++j)
        for (std::size_t t = 0; t < support.size(); ++t)
            out.estimate(support[t], static_cast<Index>(j)) = coef[j](static_cast<Index>(t));
    std::sort(support.begin(), support.end());
    out.common_support = support;
    out.residual_norm = residual_total();
    out.converged = out.residual_norm <= stop || static_cast<Index>(support.size()) == cap;
    return out;
}

}  // namespace csnet

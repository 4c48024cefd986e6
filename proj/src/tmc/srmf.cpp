#include "csnet/tmc/srmf.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/linalg.hpp"
#include "csnet/core/rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace csnet {

namespace {

double sq(const Matrix& m) { return m.squaredNorm(); }

/// Conjugate gradients on the SPD operator `apply`, starting from x.
void conjugate_gradient(const std::function<Matrix(const Matrix&)>& apply, const Matrix& rhs, Matrix& x,
                        int max_iter) {
    Matrix r = rhs - apply(x);
    Matrix p = r;
    double rr = sq(r);
    const double stop = 1e-24 * std::max(sq(rhs), 1e-300);
    for (int it = 0; it < max_iter && rr > stop; ++it) {
        const Matrix hp = apply(p);
        const double curvature = (p.array() * hp.array()).sum();
        if (curvature <= 0.0) break;
        const double alpha = rr / curvature;
        x += alpha * p;
        r -= alpha * hp;
        const double next = sq(r);
        p = r + (next / rr) * p;
        rr = next;
    }
}

struct Problem {
    const Matrix& mask;
    Matrix target;   // M .* D + A^T A X, the data side of the normal equations
    Matrix ata;      // A^T A, empty without routing
    Matrix sts;      // S^T S, empty without S
    Matrix ttt;      // T^T T, empty without T
    double lambda;
};

Matrix apply_left(const Problem& p, const Matrix& z, const Matrix& R, const Matrix& rtr, const Matrix& g) {
    Matrix out = p.mask.cwiseProduct(z * R.transpose()) * R + p.lambda * z;
    if (p.sts.size()) out += p.sts * z * rtr;
    if (g.size()) out += z * g;
    if (p.ata.size()) out += p.ata * z * rtr;
    return out;
}

Matrix apply_right(const Problem& p, const Matrix& z, const Matrix& L, const Matrix& ltl, const Matrix& h) {
    Matrix out = p.mask.cwiseProduct(L * z.transpose()).transpose() * L + p.lambda * z;
    if (h.size()) out += z * h;
    if (p.ttt.size()) out += p.ttt * z * ltl;
    return out;
}

}  // namespace

double srmf_objective(const TrafficSeries& series, const Matrix& L, const Matrix& R, double lambda, const Matrix& S,
                      const Matrix& T) {
    const Matrix p = L * R.transpose();
    double f = sq(series.mask.cwiseProduct(p - series.X)) + lambda * (sq(L) + sq(R));
    if (series.routing.size()) f += sq(series.routing * (p - series.X));
    if (S.size()) f += sq(S * p);
    if (T.size()) f += sq(p * T.transpose());
    return f;
}

Factorization srmf(const TrafficSeries& series, Index r, double lambda, const Matrix& S, const Matrix& T,
                   const SrmfOptions& options) {
    const Index n = series.flows(), m = series.times();
    require(r >= 1, "srmf: rank must be positive");
    require(lambda > 0.0, "srmf: lambda must be positive");
    require(series.mask.rows() == n && series.mask.cols() == m, "srmf: mask shape mismatch");
    require(S.size() == 0 || (S.rows() == n && S.cols() == n), "srmf: S must be n x n");
    require(T.size() == 0 || (T.rows() == m && T.cols() == m), "srmf: T must be m x m");
    require(series.routing.size() == 0 || series.routing.cols() == n, "srmf: routing must have one column per flow");

    Problem prob{series.mask, series.observed(), Matrix(), Matrix(), Matrix(), lambda};
    if (series.routing.size()) {
        prob.ata = series.routing.transpose() * series.routing;
        prob.target += prob.ata * series.X;
    }
    if (S.size()) prob.sts = S.transpose() * S;
    if (T.size()) prob.ttt = T.transpose() * T;

    const double observed = series.mask.sum();
    const double level = observed > 0 ? std::abs(series.observed().sum()) / observed : 1.0;
    const double init = std::sqrt(std::max(level, 1e-12) / static_cast<double>(r));
    Rng rng(options.seed);
    Factorization f;
    f.L = Matrix::NullaryExpr(n, r, [&] { return init * rng.uniform(); });
    f.R = Matrix::NullaryExpr(m, r, [&] { return init * rng.uniform(); });

    double current = srmf_objective(series, f.L, f.R, lambda, S, T);
    f.objective_trace.push_back(current);
    for (int it = 1; it <= options.max_iter; ++it) {
        f.iterations = it;
        const double before = current;
        {
            const Matrix rtr = f.R.transpose() * f.R;
            Matrix g;
            if (T.size()) {
                const Matrix tr = T * f.R;
                g = tr.transpose() * tr;
            }
            const Matrix rhs = prob.target * f.R;
            Matrix next = f.L;
            conjugate_gradient([&](const Matrix& z) { return apply_left(prob, z, f.R, rtr, g); }, rhs, next,
                               options.cg_iter);
            const double value = srmf_objective(series, next, f.R, lambda, S, T);
            if (value <= current) {
                f.L = std::move(next);
                current = value;
            }
        }
        {
            const Matrix ltl = f.L.transpose() * f.L;
            Matrix h = Matrix::Zero(r, r);
            if (S.size()) {
                const Matrix sl = S * f.L;
                h += sl.transpose() * sl;
            }
            if (series.routing.size()) {
                const Matrix al = series.routing * f.L;
                h += al.transpose() * al;
            }
            const Matrix rhs = prob.target.transpose() * f.L;
            Matrix next = f.R;
            conjugate_gradient([&](const Matrix& z) { return apply_right(prob, z, f.L, ltl, h); }, rhs, next,
                               options.cg_iter);
            const double value = srmf_objective(series, f.L, next, lambda, S, T);
            if (value <= current) {
                f.R = std::move(next);
                current = value;
            }
        }
        f.objective_trace.push_back(current);
        if (before - current <= options.tol * before) {
            f.converged = true;
            break;
        }
    }
    return f;
}

Matrix baseline_fit(const TrafficSeries& series, Index r, double lambda) {
    const Index n = series.flows(), m = series.times();
    require(series.mask.rows() == n && series.mask.cols() == m, "baseline_fit: mask shape mismatch");
    const double count = series.mask.sum();
    if (count == 0.0) fail(ErrorKind::DegenerateInput, "baseline_fit: no observed entries");
    const double global = series.observed().sum() / count;

    Vector row = Vector::Zero(n), col = Vector::Zero(m);
    for (Index i = 0; i < n; ++i) {
        const double c = series.mask.row(i).sum();
        if (c > 0) row(i) = (series.observed().row(i).sum() - global * c) / c;
    }
    for (Index j = 0; j < m; ++j) {
        double acc = 0.0, c = 0.0;
        for (Index i = 0; i < n; ++i) {
            if (series.mask(i, j) == 0.0) continue;
            acc += series.X(i, j) - global - row(i);
            c += 1.0;
        }
        if (c > 0) col(j) = acc / c;
    }
    Matrix base = Matrix::Constant(n, m, global);
    base.colwise() += row;
    base.rowwise() += col.transpose();
    if (r <= 0) return base;

    TrafficSeries residual;
    residual.X = series.X - base;
    residual.mask = series.mask;
    const auto fit = srmf(residual, r, lambda, Matrix(), Matrix());
    return base + fit.product();
}

Matrix baseline_interpolate(const TrafficSeries& series, Index r, double lambda) {
    const Matrix base = baseline_fit(series, r, lambda);
    const Matrix ones = Matrix::Ones(series.flows(), series.times());
    return base.cwiseProduct(ones - series.mask) + series.observed();
}

Matrix spatial_S(const Matrix& x_hat, Index K) {
    const Index n = x_hat.rows();
    require(K >= 1, "spatial_S: K must be positive");
    require(K < n, "spatial_S: K must be smaller than the row count");
    Matrix S = Matrix::Zero(n, n);
    std::vector<Index> order(static_cast<std::size_t>(n));
    Vector dist(n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) dist(j) = (x_hat.row(i) - x_hat.row(j)).squaredNorm();
        order.resize(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), Index{0});
        order.erase(order.begin() + i);
        std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return dist(a) < dist(b); });
        const Support nearest(order.begin(), order.begin() + K);
        const Matrix rows = select_rows(x_hat, nearest).transpose();
        const Vector w = least_squares(rows, Vector(x_hat.row(i).transpose()));
        S(i, i) = 1.0;
        for (Index k = 0; k < K; ++k) S(i, nearest[static_cast<std::size_t>(k)]) -= w(k);
    }
    return S;
}

ScaledConstraints scale_constraints(const Matrix& S, const Matrix& T, const Matrix& x_hat, const Matrix& B,
                                    double lambda) {
    require(lambda > 0.0, "scale_constraints: lambda must be positive");
    ScaledConstraints out{S, T, {}};
    const double level = std::sqrt(lambda) * B.norm();
    const double s_norm = (S * x_hat).norm();
    const double t_norm = (x_hat * T.transpose()).norm();
    // Relative to ||.|| ||X_hat||, anything below this is rounding noise and
    // would turn into an arbitrarily large scale factor.
    const double floor = 1e-8 * x_hat.norm();
    if (s_norm > floor * S.norm()) {
        out.S *= 0.1 * level / s_norm;
    } else {
        out.S = Matrix::Zero(S.rows(), S.cols());
        out.warnings.push_back("scale_constraints: ||S X_hat|| is zero, spatial term dropped");
    }
    if (t_norm > floor * T.norm()) {
        out.T *= level / t_norm;
    } else {
        out.T = Matrix::Zero(T.rows(), T.cols());
        out.warnings.push_back("scale_constraints: ||X_hat T^T|| is zero, temporal term dropped");
    }
    return out;
}

Matrix srmf_knn(const TrafficSeries& series, const Matrix& global_estimate, int window) {
    const Index n = series.flows(), m = series.times();
    require(global_estimate.rows() == n && global_estimate.cols() == m, "srmf_knn: estimate shape mismatch");
    require(window >= 1, "srmf_knn: window must be positive");
    Matrix out = series.observed();
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < m; ++j) {
            if (series.mask(i, j) != 0.0) continue;
            Index left = -1, right = -1;
            for (Index d = 1; d <= window && left < 0; ++d)
                if (j - d >= 0 && series.mask(i, j - d) != 0.0) left = j - d;
            for (Index d = 1; d <= window && right < 0; ++d)
                if (j + d < m && series.mask(i, j + d) != 0.0) right = j + d;
            if (left >= 0 && right >= 0) {
                const double a = static_cast<double>(j - left) / static_cast<double>(right - left);
                out(i, j) = (1.0 - a) * series.X(i, left) + a * series.X(i, right);
            } else if (left >= 0) {
                out(i, j) = series.X(i, left);
            } else if (right >= 0) {
                out(i, j) = series.X(i, right);
            } else {
                out(i, j) = global_estimate(i, j);
            }
        }
    }
    return out;
}

TmCompareResult compare_interpolators(const TmCompareParams& p, std::uint64_t seed) {
    TrafficSeries series = synth_tm(p.n_flows, p.m_times, p.rank, p.period, p.noise, derive_seed(seed, {0}));
    series.mask = make_mask(p.n_flows, p.m_times, p.pattern, p.missing, derive_seed(seed, {1}));
    series.rank_input = p.r;
    const Matrix missing = Matrix::Ones(p.n_flows, p.m_times) - series.mask;
    SrmfOptions opts;
    opts.seed = derive_seed(seed, {2});

    const Matrix x_srsvd = srmf(series, p.r, p.lambda, Matrix(), Matrix(), opts).product();
    const Matrix x_hat = baseline_interpolate(series, 2);
    const auto scaled =
        scale_constraints(spatial_S(x_hat, p.K), temporal_T(p.m_times), x_hat, series.observed(), p.lambda);
    const Matrix x_srmf = srmf(series, p.r, p.lambda, scaled.S, scaled.T, opts).product();

    TmCompareResult out;
    out.srsvd = nmae(series.X, x_srsvd, missing);
    out.srmf = nmae(series.X, x_srmf, missing);
    out.srsvd_knn = nmae(series.X, srmf_knn(series, x_srsvd, p.window), missing);
    out.srmf_knn = nmae(series.X, srmf_knn(series, x_srmf, p.window), missing);
    return out;
}

}  // namespace csnet

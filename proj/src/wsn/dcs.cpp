#include "csnet/wsn/dcs.hpp"

#include "csnet/core/error.hpp"
#include "csnet/core/linalg.hpp"
#include "csnet/core/rng.hpp"
#include "csnet/solvers/ista.hpp"
#include "csnet/solvers/omp.hpp"
#include "csnet/solvers/somp.hpp"

#include <algorithm>

namespace csnet {

JsmModel parse_jsm_model(const std::string& name) {
    if (name == "jsm1" || name == "JSM1") return JsmModel::Jsm1;
    if (name == "jsm2" || name == "JSM2") return JsmModel::Jsm2;
    if (name == "jsm3" || name == "JSM3") return JsmModel::Jsm3;
    fail(ErrorKind::InvalidParameter, "unknown JSM model '" + name + "'");
}

const char* to_string(JsmModel model) noexcept {
    switch (model) {
        case JsmModel::Jsm1: return "jsm1";
        case JsmModel::Jsm2: return "jsm2";
        case JsmModel::Jsm3: return "jsm3";
    }
    return "unknown";
}

namespace {

double coefficient(Rng& rng) { return rng.sign() * rng.uniform(1.0, 2.0); }

Vector sparse_draw(Index n, Index k, Rng& rng) {
    Vector v = Vector::Zero(n);
    for (auto i : rng.choose(n, k)) v(i) = coefficient(rng);
    return v;
}

void fill_signal_domain(JsmEnsemble& e, const Matrix& psi) {
    e.common = psi * e.common_coef;
    e.innovations = psi * e.innovation_coef;
    e.signals = e.innovations.colwise() + e.common;
}

Matrix stacked_gram_solve(const std::vector<Matrix>& a, const std::vector<Vector>& b, Index n) {
    Matrix normal = Matrix::Zero(n, n);
    Vector rhs = Vector::Zero(n);
    for (std::size_t j = 0; j < a.size(); ++j) {
        normal += a[j].transpose() * a[j];
        rhs += a[j].transpose() * b[j];
    }
    return normal.completeOrthogonalDecomposition().solve(rhs);
}

}  // namespace

JsmEnsemble dcs_synthesize(JsmModel model, Index n, Index sensors, Index k0, Index k, std::uint64_t seed,
                           const Matrix& psi) {
    require(n >= 1 && sensors >= 1, "dcs_synthesize: n and sensor count must be positive");
    require(psi.rows() == n && psi.cols() == n, "dcs_synthesize: psi must be n x n");
    require(k0 >= 0 && k >= 0, "dcs_synthesize: sparsities must be nonnegative");
    require(k0 + k <= n, "dcs_synthesize: need k0 + k <= n");
    Rng rng(seed);
    JsmEnsemble e;
    e.model = model;
    e.k0 = k0;
    e.k = k;
    e.common_coef = Vector::Zero(n);
    e.innovation_coef = Matrix::Zero(n, sensors);
    switch (model) {
        case JsmModel::Jsm1:
            e.common_coef = sparse_draw(n, k0, rng);
            for (Index j = 0; j < sensors; ++j) e.innovation_coef.col(j) = sparse_draw(n, k, rng);
            break;
        case JsmModel::Jsm2: {
            require(k >= 1, "dcs_synthesize: JSM2 needs k >= 1");
            e.k0 = 0;
            const auto supp = rng.choose(n, k);
            for (Index j = 0; j < sensors; ++j)
                for (auto i : supp) e.innovation_coef(i, j) = coefficient(rng);
            break;
        }
        case JsmModel::Jsm3:
            e.k0 = n;
            for (Index i = 0; i < n; ++i) e.common_coef(i) = coefficient(rng);
            for (Index j = 0; j < sensors; ++j) e.innovation_coef.col(j) = sparse_draw(n, k, rng);
            break;
    }
    fill_signal_domain(e, psi);
    return e;
}

DcsEstimate dcs_recover(JsmModel model, const std::vector<Vector>& ys, const std::vector<Matrix>& phis,
                        const Matrix& psi, const DcsParams& params) {
    require(!ys.empty() && ys.size() == phis.size(), "dcs_recover: need one matrix per sensor");
    const Index n = psi.cols();
    const auto sensors = static_cast<Index>(ys.size());
    std::vector<Matrix> a(ys.size());
    for (std::size_t j = 0; j < ys.size(); ++j) {
        require(phis[j].cols() == psi.rows(), "dcs_recover: phi columns must match psi rows");
        require(phis[j].rows() == ys[j].size(), "dcs_recover: measurement length mismatch");
        a[j] = phis[j] * psi;
    }

    DcsEstimate out;
    JsmEnsemble& e = out.estimate;
    e.model = model;
    e.k0 = params.k0;
    e.k = params.k;
    e.common_coef = Vector::Zero(n);
    e.innovation_coef = Matrix::Zero(n, sensors);

    switch (model) {
        case JsmModel::Jsm1: {
            Index rows = 0;
            for (const auto& y : ys) rows += y.size();
            Matrix big = Matrix::Zero(rows, n * (sensors + 1));
            Vector stacked(rows);
            Index r = 0;
            for (Index j = 0; j < sensors; ++j) {
                const Index mj = ys[static_cast<std::size_t>(j)].size();
                big.block(r, 0, mj, n) = a[static_cast<std::size_t>(j)];
                big.block(r, n * (j + 1), mj, n) = a[static_cast<std::size_t>(j)];
                stacked.segment(r, mj) = ys[static_cast<std::size_t>(j)];
                r += mj;
            }
            const double scale = (big.transpose() * stacked).cwiseAbs().maxCoeff();
            if (scale == 0.0) {
                out.converged = true;
                break;
            }
            const auto lasso = ista_lasso(big, stacked, params.lambda_ratio * scale, 20000, 1e-10);
            Vector theta = lasso.estimate;
            const Support atoms = support_of(theta, 1e-3);
            if (!atoms.empty() && static_cast<Index>(atoms.size()) <= rows) {
                const Vector fit = least_squares(select_columns(big, atoms), stacked);
                theta.setZero();
                for (std::size_t t = 0; t < atoms.size(); ++t) theta(atoms[t]) = fit(static_cast<Index>(t));
            }
            e.common_coef = theta.head(n);
            for (Index j = 0; j < sensors; ++j) e.innovation_coef.col(j) = theta.segment(n * (j + 1), n);
            out.rounds = lasso.iterations;
            out.converged = lasso.converged;
            break;
        }
        case JsmModel::Jsm2: {
            require(params.k >= 1, "dcs_recover: JSM2 needs k");
            const auto r = somp_multi(a, ys, static_cast<int>(params.k));
            e.innovation_coef = r.estimate;
            out.rounds = r.iterations;
            out.converged = r.converged;
            break;
        }
        case JsmModel::Jsm3: {
            require(params.k >= 0, "dcs_recover: JSM3 needs k");
            Index total = 0;
            for (const auto& y : ys) total += y.size();
            require(total >= n, "dcs_recover: JSM3 needs at least n measurements in total");
            // Round 0 treats the innovations as noise: stacked least squares.
            Vector z0 = stacked_gram_solve(a, ys, n);
            std::vector<Support> supports(ys.size());
            for (int round = 1; round <= params.max_rounds; ++round) {
                out.rounds = round;
                std::vector<Support> next(ys.size());
                for (std::size_t j = 0; j < ys.size(); ++j) {
                    if (params.k == 0) continue;
                    next[j] = omp(a[j], ys[j] - a[j] * z0, 0.0, static_cast<int>(params.k)).support;
                }
                // Re-estimate the common part on the complement of each
                // sensor's innovation span.
                std::vector<Matrix> qa(ys.size());
                std::vector<Vector> qy(ys.size());
                for (std::size_t j = 0; j < ys.size(); ++j) {
                    if (next[j].empty()) {
                        qa[j] = a[j];
                        qy[j] = ys[j];
                        continue;
                    }
                    const Matrix aj = select_columns(a[j], next[j]);
                    Eigen::HouseholderQR<Matrix> qr(aj);
                    const Matrix q = qr.householderQ() * Matrix::Identity(aj.rows(), aj.rows());
                    const Matrix comp = q.rightCols(aj.rows() - aj.cols()).transpose();
                    qa[j] = comp * a[j];
                    qy[j] = comp * ys[j];
                }
                z0 = stacked_gram_solve(qa, qy, n);
                const bool settled = next == supports;
                supports = std::move(next);
                if (settled) {
                    out.converged = true;
                    break;
                }
            }
            e.common_coef = z0;
            for (std::size_t j = 0; j < ys.size(); ++j) {
                if (supports[j].empty()) continue;
                const Vector fit = least_squares(select_columns(a[j], supports[j]), Vector(ys[j] - a[j] * z0));
                for (std::size_t t = 0; t < supports[j].size(); ++t)
                    e.innovation_coef(supports[j][t], static_cast<Index>(j)) = fit(static_cast<Index>(t));
            }
            break;
        }
    }
    fill_signal_domain(e, psi);
    return out;
}

}  // namespace csnet

#pragma once

#include "csnet/core/types.hpp"
#include "csnet/solvers/recover.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace csnet {

enum class JsmModel { Jsm1, Jsm2, Jsm3 };

JsmModel parse_jsm_model(const std::string& name);
const char* to_string(JsmModel model) noexcept;

/// Jointly sparse signal ensemble; columns are sensors. `common` and
/// `innovations` are in the signal domain, the *_coef fields in the basis.
struct JsmEnsemble {
    JsmModel model = JsmModel::Jsm1;
    Matrix signals;
    Vector common;
    Matrix innovations;
    Vector common_coef;
    Matrix innovation_coef;
    Index k0 = 0;
    Index k = 0;
};

/// Planted ensemble with coefficients +-Uniform[1, 2].
///  - JSM1: k0-sparse common part plus k-sparse innovations.
///  - JSM2: every signal is k-sparse on one shared support (k0 unused).
///  - JSM3: dense common part (every entry nonzero) plus k-sparse innovations.
JsmEnsemble dcs_synthesize(JsmModel model, Index n, Index sensors, Index k0, Index k, std::uint64_t seed,
                           const Matrix& psi);

struct DcsParams {
    Index k0 = 0;
    Index k = 0;
    /// Lasso weight for JSM1, relative to ||A^T y||_inf of the stacked system.
    double lambda_ratio = 1e-3;
    int max_rounds = 10;
};

struct DcsEstimate {
    JsmEnsemble estimate;
    int rounds = 0;
    bool converged = false;
};

/// Joint recovery from per-sensor measurements y_j = phis[j] x_j.
///  - JSM1: one lasso over the stacked unknown [theta_0; theta_1; ...].
///  - JSM2: simultaneous OMP across sensors.
///  - JSM3: alternating common/innovation estimation (ACIE).
DcsEstimate dcs_recover(JsmModel model, const std::vector<Vector>& ys, const std::vector<Matrix>& phis,
                        const Matrix& psi, const DcsParams& params);

}  // namespace csnet

#include "csnet/core/types.hpp"

#include "csnet/core/error.hpp"

namespace csnet {

const char* to_string(BasisKind kind) noexcept {
    switch (kind) {
        case BasisKind::Identity: return "identity";
        case BasisKind::DftReal: return "dft_real";
        case BasisKind::Haar: return "haar";
        case BasisKind::GraphEigen: return "graph_eigen";
        case BasisKind::ShiftDictionary: return "shift_dictionary";
        case BasisKind::Custom: return "custom";
    }
    return "unknown";
}

const char* to_string(Recipe recipe) noexcept {
    switch (recipe) {
        case Recipe::Gaussian: return "gaussian";
        case Recipe::Bernoulli: return "bernoulli";
        case Recipe::SparseRandom: return "sparse_random";
        case Recipe::BinaryRouting: return "binary_routing";
        case Recipe::Custom: return "custom";
    }
    return "unknown";
}

Support support_of(const Vector& v, double relative_tolerance) {
    Support out;
    if (v.size() == 0) return out;
    const double peak = v.cwiseAbs().maxCoeff();
    if (peak == 0.0) return out;
    const double cut = relative_tolerance * peak;
    for (Index i = 0; i < v.size(); ++i)
        if (std::abs(v(i)) > cut) out.push_back(i);
    return out;
}

SparseSignal make_sparse_signal(const BasisMatrix& basis, const Vector& coefficients) {
    require(basis.atoms() == coefficients.size(), "make_sparse_signal: coefficient length must match basis atoms");
    SparseSignal s;
    s.coefficients = coefficients;
    s.values = basis.entries * coefficients;
    s.basis = basis.kind;
    s.support = support_of(coefficients);
    return s;
}

}  // namespace csnet

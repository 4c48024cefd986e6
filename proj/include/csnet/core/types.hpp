#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace csnet {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Sorted, duplicate-free list of coefficient indices.
using Support = std::vector<Index>;

/// Zero tolerance for support, rank and dependence tests, relative to the
/// largest magnitude involved in the comparison.
inline constexpr double kZeroTolerance = 1e-8;

enum class BasisKind { Identity, DftReal, Haar, GraphEigen, ShiftDictionary, Custom };

const char* to_string(BasisKind kind) noexcept;

/// Sparsifying basis or redundant dictionary. Columns are the atoms.
struct BasisMatrix {
    Matrix entries;
    BasisKind kind = BasisKind::Identity;
    /// Eigenvalues paired with the columns for graph bases; empty otherwise.
    Vector spectrum;

    Index dimension() const { return entries.rows(); }
    Index atoms() const { return entries.cols(); }
    bool orthonormal_kind() const {
        return kind != BasisKind::ShiftDictionary && kind != BasisKind::Custom;
    }
};

enum class Recipe { Gaussian, Bernoulli, SparseRandom, BinaryRouting, Custom };

const char* to_string(Recipe recipe) noexcept;

struct SensingMatrix {
    Matrix entries;
    Recipe recipe = Recipe::Custom;
    std::uint64_t seed = 0;
    /// Measurement sparsity parameter for SparseRandom; 0 when unused.
    int s = 0;

    Index rows() const { return entries.rows(); }
    Index cols() const { return entries.cols(); }
};

/// A signal together with the basis it is sparse in and its support there.
struct SparseSignal {
    Vector values;
    Vector coefficients;
    BasisKind basis = BasisKind::Identity;
    Support support;
};

/// Support of v: indices whose magnitude exceeds kZeroTolerance times max|v|.
Support support_of(const Vector& v, double relative_tolerance = kZeroTolerance);

SparseSignal make_sparse_signal(const BasisMatrix& basis, const Vector& coefficients);

}  // namespace csnet

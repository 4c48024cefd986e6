#pragma once

#include "csnet/core/types.hpp"

#include <cstdint>
#include <functional>
#include <span>

namespace csnet {

Matrix select_columns(const Matrix& a, const Support& cols);
Matrix select_rows(const Matrix& a, const Support& rows);

/// Least-squares solution of min ||a x - y||_2 via a rank-revealing QR;
/// minimum-norm when a is rank deficient.
Vector least_squares(const Matrix& a, const Vector& y);
Matrix least_squares(const Matrix& a, const Matrix& y);

/// Largest eigenvalue of a^T a by power iteration.
double gram_spectral_norm(const Matrix& a, int max_iter = 500, double tol = 1e-12);

double nuclear_norm(const Matrix& x);

/// U diag(max(sigma - tau, 0)) V^T.
Matrix singular_value_threshold(const Matrix& x, double tau);

/// Best rank-r approximation in Frobenius norm.
Matrix truncated_svd(const Matrix& x, Index r);

/// Number of singular values above relative_tol * sigma_max.
Index numerical_rank(const Matrix& x, double relative_tol = 1e-9);

std::uint64_t binomial(int n, int k);

/// Calls fn with every k-subset of {0..n-1} in lexicographic order. Stops
/// early when fn returns false.
void for_each_combination(int n, int k, const std::function<bool(std::span<const int>)>& fn);

}  // namespace csnet

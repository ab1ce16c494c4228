#pragma once

#include <optional>
#include <vector>

#include "covtrans/sym_matrix.hpp"

namespace covtrans::linalg {

/// Lower Cholesky factor of a symmetric matrix, stored row-major (d x d,
/// upper part zero). Returns nullopt when any pivot drops to pivot_tol or
/// below.
std::optional<std::vector<double>> cholesky_lower(const SymMatrix& m, double pivot_tol = 1e-12);

[[nodiscard]] bool is_positive_definite(const SymMatrix& m, double pivot_tol = 1e-12);

/// Runs the definiteness check and stamps the matrix's PD flag on success.
bool certify_positive_definite(SymMatrix& m, double pivot_tol = 1e-12);

/// Inverse of a positive-definite matrix via Cholesky factorization and
/// forward/back substitution, explicitly symmetrized as (M + M^T)/2.
/// Throws EngineError when the factorization fails.
[[nodiscard]] SymMatrix pd_inverse(const SymMatrix& m);

/// Eigenvalues of a symmetric matrix in ascending order.
[[nodiscard]] std::vector<double> symmetric_eigenvalues(const SymMatrix& m);

/// max |eigenvalue| (= operator norm for symmetric matrices).
[[nodiscard]] double operator_norm_sym(const SymMatrix& m);

/// sqrt of the sum of squared entries.
[[nodiscard]] double hilbert_schmidt_norm(const SymMatrix& m);

}  // namespace covtrans::linalg

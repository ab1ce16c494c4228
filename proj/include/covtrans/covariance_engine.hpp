#pragma once

#include "covtrans/derivative_series.hpp"
#include "covtrans/sym_matrix.hpp"

namespace covtrans {

struct TransformRequest {
    SymMatrix sigma;      // positive-definite input covariance
    DerivativeSeries f;   // diagonal transformation, odd parity
};

/// tau_ij = sum over odd k of G_kij(1/2) cov^k / k!. Requires odd parity;
/// a zero covariance maps to an exact zero.
double transformed_offdiag(const DerivativeSeries& f, double var_i, double var_j, double cov);

/// tau_ii = sum over even n >= 2 of b_n var^{n/2}, with g = f^2 supplying
/// the b_n coefficients.
double transformed_diag(const DerivativeSeries& f, double var_i);

/// E[f(X_i)] = sum over even k of a_k var^{k/2}; identically zero for odd f.
double transformed_mean(const DerivativeSeries& f, double var_i);

/// Entrywise transformed covariance: diagonal from transformed_diag,
/// off-diagonals from transformed_offdiag. Upper-triangle entries are
/// independent pure computations, evaluated in parallel when OpenMP is
/// enabled; the result is bit-identical to the serial reference.
SymMatrix transform_covariance(const TransformRequest& req);

/// Serial reference for transform_covariance, kept for equivalence tests
/// and benchmarking.
SymMatrix transform_covariance_serial(const TransformRequest& req);

/// Implementation-independent check: the truncated double series
/// sum_{n even} sum_p f^(p)(0) f^(n-p)(0) / (p!(n-p)!) E[X_i^p X_j^{n-p}]
/// with moments from isserlis_bivariate. order must be even and <= 30.
/// Diagonal case: var_i = var_j = cov.
double double_series_oracle(const DerivativeSeries& f, double var_i, double var_j, double cov,
                            int order);

struct ConvergenceReport {
    double bound_M = 0.0;  // max_i sqrt(var_i)
    bool ok = false;       // growth bound present, so the series hypothesis is verifiable
};

/// Advisory check of the bounded-derivative convergence hypothesis; the
/// transformation proceeds regardless of the outcome.
ConvergenceReport convergence_check(const DerivativeSeries& f, const SymMatrix& sigma);

}  // namespace covtrans

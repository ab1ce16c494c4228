#pragma once

#include <cstdint>

namespace covtrans {

/// Moment query for a mean-zero Gaussian pair (X_i, X_j):
/// E[X_i^p X_j^q] with Cov = [[var_i, cov], [cov, var_j]].
struct BivariateMomentQuery {
    int p = 0;
    int q = 0;
    double var_i = 1.0;
    double var_j = 1.0;
    double cov = 0.0;
};

/// k (k-2) (k-4) ... ; returns 1 for k in {-1, 0}. Guarded at k <= 33 so the
/// 128-bit internal table stays exact through the largest coefficient any
/// admissible moment query produces.
std::int64_t double_factorial(int k);

/// E[X^k] for X ~ N(0, variance): 0 for odd k, variance^{k/2} (k-1)!! for
/// even k.
double univariate_moment(int k, double variance);

/// Closed-form bivariate product moment via the pair-counting sum over the
/// shared covariance power k = min(p, q), min(p, q) - 2, ...
double isserlis_bivariate(const BivariateMomentQuery& q);

/// Brute-force pair-partition enumeration of the same moment. Independent of
/// isserlis_bivariate; tractable for p + q <= 16.
double isserlis_oracle(const BivariateMomentQuery& q);

}  // namespace covtrans

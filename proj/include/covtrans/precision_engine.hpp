#pragma once

#include <vector>

#include "covtrans/derivative_series.hpp"
#include "covtrans/graph_factory.hpp"
#include "covtrans/sym_matrix.hpp"

namespace covtrans {

/// A precision matrix Gamma = I + B with zero-diagonal perturbation B,
/// its computed operator-norm bound delta = |B| < 1 and the covariance-side
/// scale epsilon = delta / (1 - delta).
struct NearIdentityPrecision {
    SymMatrix gamma;
    SymMatrix b_matrix;
    double delta = 0.0;
    double epsilon = 0.0;
};

/// Scale constants of the transformation: kappa multiplies unit variances,
/// lambda multiplies off-diagonal covariances to first order.
struct AnalysisConstants {
    double kappa = 0.0;
    double lambda = 0.0;
    double inv_kappa = 0.0;
    double lambda_over_kappa_sq = 0.0;
};

struct SparsityEntry {
    int i = 0;
    int j = 0;
    double value = 0.0;
    bool structural_edge = false;
};

/// Side-by-side exact/predicted matrices with the error decomposition and
/// the sparsity classification of the transformed precision.
struct TransformReport {
    SymMatrix sigma_rho;        // exact inverse of the input precision
    SymMatrix sigma_pi;         // exact transformed covariance
    SymMatrix predicted_sigma;  // kappa I - lambda B
    SymMatrix gamma_pi;         // numerically exact inverse of sigma_pi
    SymMatrix predicted_gamma;  // (1/kappa) I + (lambda/kappa^2) B
    SymMatrix e_prime;          // sigma_pi - predicted_sigma
    SymMatrix e_double_prime;   // gamma_pi - predicted_gamma (no bound claimed)
    AnalysisConstants constants;
    double delta = 0.0;
    double epsilon = 0.0;
    double e_prime_opnorm = 0.0;
    double e_prime_diag_opnorm = 0.0;     // diagonal part E1
    double e_prime_offdiag_opnorm = 0.0;  // off-diagonal part E2
    double e_prime_offdiag_hsnorm = 0.0;
    double threshold = 0.0;
    std::vector<SparsityEntry> classification;  // upper-triangle off-diagonals
};

struct NeumannInverse {
    SymMatrix inverse;      // numerically exact
    SymMatrix first_order;  // I - B
    double tail_bound = 0.0;  // delta^2 / (1 - delta)
};

/// Inverse of A = I + B with |B| = delta < 1; the exact inverse stays within
/// tail_bound of the first-order expansion I - B in operator norm.
NeumannInverse neumann_inverse(const SymMatrix& a);

/// Extracts B from a unit-diagonal precision and computes delta (largest
/// absolute eigenvalue of B) and epsilon. Rejects inputs whose diagonal is
/// not 1 within 1e-12 or whose delta reaches 1.
NearIdentityPrecision analyze_near_identity(const SymMatrix& gamma);

/// kappa = sum over odd k of F_k(1/2)^2 / k!; lambda = F_1(1/2)^2.
AnalysisConstants constants_for(const DerivativeSeries& f);

/// Runs the full pipeline: exact covariance, exact transformed covariance,
/// the kappa/lambda structural predictions on both sides, error norms, and
/// the threshold classification of the transformed precision.
TransformReport predict_and_compare(const NearIdentityPrecision& prec, const DerivativeSeries& f,
                                    double threshold = 0.01);

struct ScalingRow {
    double weight = 0.0;
    double delta = 0.0;
    double epsilon = 0.0;
    double e_prime_norm = 0.0;
    double ratio = 0.0;  // |E'| / epsilon^2
};

/// Rebuilds the graph precision at each edge weight and tabulates how the
/// prediction error shrinks with epsilon; the ratio column stays bounded as
/// epsilon decreases.
std::vector<ScalingRow> error_scaling_probe(const DerivativeSeries& f, const GraphSpec& graph,
                                            const std::vector<double>& weights);

/// max |eigenvalue| of a symmetric matrix.
double operator_norm(const SymMatrix& m);

/// sqrt of the sum of squared entries; always >= operator_norm.
double hs_norm(const SymMatrix& m);

}  // namespace covtrans

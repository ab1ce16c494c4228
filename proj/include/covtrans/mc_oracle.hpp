#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "covtrans/derivative_series.hpp"
#include "covtrans/sym_matrix.hpp"

namespace covtrans {

/// Pointwise evaluator for the diagonal transformation. Built-in series are
/// evaluated through the true function (sin, sinh, x^3, monomials) so the
/// sampling check stays independent of the series machinery; user-supplied
/// series fall back to truncated Taylor evaluation.
class PointEvaluator {
public:
    explicit PointEvaluator(DerivativeSeries series);

    [[nodiscard]] double operator()(double x) const;

    /// True when evaluation falls back to the truncated Taylor sum, in which
    /// case tail mass beyond the series radius is unvalidated.
    [[nodiscard]] bool uses_series_evaluation() const noexcept { return !builtin_; }

    [[nodiscard]] const DerivativeSeries& series() const noexcept { return series_; }

private:
    enum class Kind { sin, sinh, cube, monomial, series };
    DerivativeSeries series_;
    Kind kind_ = Kind::series;
    bool builtin_ = false;
    int monomial_power_ = 1;
    double monomial_scale_ = 1.0;
};

struct SampleConfig {
    long long n_samples = 100000;
    std::uint64_t seed = 0;
    long long chunk = 4096;  // samples per accumulation block
};

struct EntryFlag {
    int i = 0;
    int j = 0;
    double deviation = 0.0;
    double standard_error = 0.0;
};

struct EmpiricalComparison {
    SymMatrix empirical;
    SymMatrix analytic;
    SymMatrix standard_errors;
    double max_abs_dev = 0.0;
    double se_multiplier = 4.0;
    std::vector<EntryFlag> flagged;
};

/// Draws n samples of X ~ N(0, sigma) through the Cholesky factor, applies
/// f elementwise and returns the mean-subtracted empirical covariance
/// (1/n normalization). Sampling is counter-indexed per (sample, block) and
/// accumulation is chunked with an ordered reduction, so the result is
/// bit-identical for any worker count.
SymMatrix sample_transformed_covariance(const SymMatrix& sigma, const PointEvaluator& f,
                                        const SampleConfig& cfg);

/// Serial reference for sample_transformed_covariance.
SymMatrix sample_transformed_covariance_serial(const SymMatrix& sigma, const PointEvaluator& f,
                                               const SampleConfig& cfg);

/// Entrywise comparison with the Gaussian-proxy asymptotic standard error
/// sqrt((a_ii a_jj + a_ij^2)/n); entries deviating beyond
/// se_multiplier * SE are flagged.
EmpiricalComparison compare(const SymMatrix& empirical, const SymMatrix& analytic, long long n,
                            double se_multiplier = 4.0);

}  // namespace covtrans

#include "covtrans/covariance_engine.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "covtrans/errors.hpp"
#include "covtrans/gaussian_moments.hpp"
#include "covtrans/linalg.hpp"

namespace covtrans {

namespace {

constexpr int kOddSeriesCap = 63;

bool series_done(double term, double partial) {
    return term != 0.0 && std::abs(term) < kSeriesTolerance * (1.0 + std::abs(partial));
}

SymMatrix transform_impl(const TransformRequest& req, bool parallel) {
    if (req.f.parity() != Parity::odd) {
        throw OddParityError("transform_covariance: requires an odd transformation");
    }
    if (!req.sigma.positive_definite_flag() && !linalg::is_positive_definite(req.sigma)) {
        throw EngineError("transform_covariance: input covariance is not positive definite");
    }
    const int d = req.sigma.dim();
    const long long cells = static_cast<long long>(d) * (d + 1) / 2;
    std::vector<double> values(cells);

    // Each upper-triangle cell is a pure function of its inputs and owns
    // exactly one slot, so the schedule cannot change the result.
#pragma omp parallel for schedule(static) if (parallel)
    for (long long cell = 0; cell < cells; ++cell) {
        long long rem = cell;
        int i = 0;
        while (rem >= d - i) {
            rem -= d - i;
            ++i;
        }
        const int j = i + static_cast<int>(rem);
        values[cell] =
            (i == j) ? transformed_diag(req.f, req.sigma(i, i))
                     : transformed_offdiag(req.f, req.sigma(i, i), req.sigma(j, j),
                                           req.sigma(i, j));
    }

    SymMatrix out(d);
    long long cell = 0;
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            out.set(i, j, values[cell++]);
        }
    }
    return out;
}

}  // namespace

double transformed_offdiag(const DerivativeSeries& f, double var_i, double var_j, double cov) {
    if (f.parity() != Parity::odd) {
        throw OddParityError("transformed_offdiag: requires an odd transformation");
    }
    if (var_i <= 0.0 || var_j <= 0.0) {
        throw std::invalid_argument("transformed_offdiag: variances must be positive");
    }
    if (cov * cov > var_i * var_j * (1.0 + 1e-12)) {
        throw std::invalid_argument("transformed_offdiag: cov^2 must not exceed var_i * var_j");
    }
    if (cov == 0.0) {
        return 0.0;  // every term carries cov^k, k >= 1
    }
    const int cap = std::min(kOddSeriesCap, f.max_order());
    double sum = 0.0;
    double cov_pow_over_fact = cov;  // cov^k / k!
    for (int k = 1; k <= cap; k += 2) {
        if (k > 1) {
            cov_pow_over_fact *= cov * cov / (static_cast<double>(k) * (k - 1));
        }
        const double term = eval_G(f, k, var_i, var_j, 0.5) * cov_pow_over_fact;
        sum += term;
        if (series_done(term, sum)) {
            break;
        }
    }
    return sum;
}

double transformed_diag(const DerivativeSeries& f, double var_i) {
    if (var_i <= 0.0) {
        throw std::invalid_argument("transformed_diag: variance must be positive");
    }
    const CoefficientTable table = coefficient_table(f);
    double sum = 0.0;
    double var_pow = 1.0;  // var^{n/2} at n = 2m
    for (std::size_t m = 1; m < table.b.size(); ++m) {
        var_pow *= var_i;
        const double term = table.b[m] * var_pow;
        sum += term;
        if (series_done(term, sum)) {
            break;
        }
    }
    return sum;
}

double transformed_mean(const DerivativeSeries& f, double var_i) {
    if (var_i <= 0.0) {
        throw std::invalid_argument("transformed_mean: variance must be positive");
    }
    const CoefficientTable table = coefficient_table(f);
    double sum = 0.0;
    double var_pow = 1.0;
    for (std::size_t m = 0; m < table.a.size(); ++m) {
        if (m > 0) {
            var_pow *= var_i;
        }
        const double term = table.a[m] * var_pow;
        sum += term;
        if (series_done(term, sum)) {
            break;
        }
    }
    return sum;
}

SymMatrix transform_covariance(const TransformRequest& req) {
    return transform_impl(req, true);
}

SymMatrix transform_covariance_serial(const TransformRequest& req) {
    return transform_impl(req, false);
}

double double_series_oracle(const DerivativeSeries& f, double var_i, double var_j, double cov,
                            int order) {
    if (order % 2 != 0 || order < 2) {
        throw std::invalid_argument("double_series_oracle: order must be even and >= 2");
    }
    if (order > 30) {
        throw std::invalid_argument("double_series_oracle: order must be <= 30");
    }
    // Factorials up to 30 in double; the ~1e-16 relative rounding beyond 18!
    // is far below the oracle comparison tolerances.
    std::vector<double> fact(order + 1, 1.0);
    for (int k = 1; k <= order; ++k) {
        fact[k] = fact[k - 1] * k;
    }
    double sum = 0.0;
    for (int n = 2; n <= order; n += 2) {
        for (int p = 0; p <= n; ++p) {
            const double c = f.deriv(p) * f.deriv(n - p) / (fact[p] * fact[n - p]);
            if (c == 0.0) {
                continue;
            }
            sum += c * isserlis_bivariate({p, n - p, var_i, var_j, cov});
        }
    }
    return sum;
}

ConvergenceReport convergence_check(const DerivativeSeries& f, const SymMatrix& sigma) {
    ConvergenceReport report;
    for (int i = 0; i < sigma.dim(); ++i) {
        report.bound_M = std::max(report.bound_M, std::sqrt(sigma(i, i)));
    }
    report.ok = f.growth_bound().has_value();
    return report;
}

}  // namespace covtrans

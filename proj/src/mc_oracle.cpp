#include "covtrans/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "covtrans/counter_rng.hpp"
#include "covtrans/errors.hpp"
#include "covtrans/linalg.hpp"

namespace covtrans {

PointEvaluator::PointEvaluator(DerivativeSeries series) : series_(std::move(series)) {
    const std::string& name = series_.name();
    if (name == "sin") {
        kind_ = Kind::sin;
    } else if (name == "sinh") {
        kind_ = Kind::sinh;
    } else if (name == "cube") {
        kind_ = Kind::cube;
    } else if (name.rfind("odd_monomial(", 0) == 0) {
        kind_ = Kind::monomial;
        const int l = std::stoi(name.substr(13));
        monomial_power_ = 2 * l + 1;
        double fact = 1.0;
        for (int v = 2; v <= monomial_power_; ++v) {
            fact *= v;
        }
        monomial_scale_ = 1.0 / fact;
    } else {
        kind_ = Kind::series;
    }
    builtin_ = kind_ != Kind::series;
}

double PointEvaluator::operator()(double x) const {
    switch (kind_) {
        case Kind::sin:
            return std::sin(x);
        case Kind::sinh:
            return std::sinh(x);
        case Kind::cube:
            return x * x * x;
        case Kind::monomial: {
            double p = x;
            for (int v = 1; v < monomial_power_; ++v) {
                p *= x;
            }
            return p * monomial_scale_;
        }
        case Kind::series:
            return evaluate_taylor(series_, x);
    }
    return 0.0;
}

namespace {

struct ChunkAccumulator {
    std::vector<double> sum_outer;  // packed upper triangle of sum y y^T
    std::vector<double> sum_y;
};

void validate(const SampleConfig& cfg) {
    if (cfg.n_samples < 2) {
        throw std::invalid_argument("sample config: n_samples must be >= 2");
    }
    if (cfg.chunk < 1) {
        throw std::invalid_argument("sample config: chunk must be >= 1");
    }
}

SymMatrix sample_impl(const SymMatrix& sigma, const PointEvaluator& f, const SampleConfig& cfg,
                      bool parallel) {
    validate(cfg);
    const auto chol = linalg::cholesky_lower(sigma);
    if (!chol) {
        throw EngineError("sample_transformed_covariance: sigma is not positive definite");
    }
    const std::vector<double>& lower = *chol;
    const int d = sigma.dim();
    const long long n = cfg.n_samples;
    const long long n_chunks = (n + cfg.chunk - 1) / cfg.chunk;
    const std::size_t packed = static_cast<std::size_t>(d) * (d + 1) / 2;

    std::vector<ChunkAccumulator> partials(n_chunks);

#pragma omp parallel for schedule(static) if (parallel)
    for (long long c = 0; c < n_chunks; ++c) {
        ChunkAccumulator acc;
        acc.sum_outer.assign(packed, 0.0);
        acc.sum_y.assign(d, 0.0);
        std::vector<double> z(d), y(d);
        const long long begin = c * cfg.chunk;
        const long long end = std::min(n, begin + cfg.chunk);
        for (long long s = begin; s < end; ++s) {
            for (int i = 0; i < d; i += 2) {
                const auto pair = rng::normal_pair(static_cast<std::uint64_t>(s),
                                                   static_cast<std::uint32_t>(i / 2), cfg.seed);
                z[i] = pair[0];
                if (i + 1 < d) {
                    z[i + 1] = pair[1];
                }
            }
            for (int i = 0; i < d; ++i) {
                double x = 0.0;
                for (int k = 0; k <= i; ++k) {
                    x += lower[static_cast<std::size_t>(i) * d + k] * z[k];
                }
                y[i] = f(x);
            }
            std::size_t slot = 0;
            for (int i = 0; i < d; ++i) {
                acc.sum_y[i] += y[i];
                for (int j = i; j < d; ++j) {
                    acc.sum_outer[slot++] += y[i] * y[j];
                }
            }
        }
        partials[c] = std::move(acc);
    }

    // Ordered reduction over chunk indices keeps the sum deterministic.
    std::vector<double> total_outer(packed, 0.0);
    std::vector<double> total_y(d, 0.0);
    for (long long c = 0; c < n_chunks; ++c) {
        for (std::size_t t = 0; t < packed; ++t) {
            total_outer[t] += partials[c].sum_outer[t];
        }
        for (int i = 0; i < d; ++i) {
            total_y[i] += partials[c].sum_y[i];
        }
    }

    SymMatrix emp(d);
    const double inv_n = 1.0 / static_cast<double>(n);
    std::size_t slot = 0;
    for (int i = 0; i < d; ++i) {
        const double mean_i = total_y[i] * inv_n;
        for (int j = i; j < d; ++j) {
            const double mean_j = total_y[j] * inv_n;
            emp.set(i, j, total_outer[slot++] * inv_n - mean_i * mean_j);
        }
    }
    return emp;
}

}  // namespace

SymMatrix sample_transformed_covariance(const SymMatrix& sigma, const PointEvaluator& f,
                                        const SampleConfig& cfg) {
    return sample_impl(sigma, f, cfg, true);
}

SymMatrix sample_transformed_covariance_serial(const SymMatrix& sigma, const PointEvaluator& f,
                                               const SampleConfig& cfg) {
    return sample_impl(sigma, f, cfg, false);
}

EmpiricalComparison compare(const SymMatrix& empirical, const SymMatrix& analytic, long long n,
                            double se_multiplier) {
    if (empirical.dim() != analytic.dim()) {
        throw std::invalid_argument("compare: dimension mismatch");
    }
    if (n < 2) {
        throw std::invalid_argument("compare: n must be >= 2");
    }
    const int d = empirical.dim();
    EmpiricalComparison cmp;
    cmp.empirical = empirical;
    cmp.analytic = analytic;
    cmp.standard_errors = SymMatrix(d);
    cmp.se_multiplier = se_multiplier;
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            const double se = std::sqrt(
                (analytic(i, i) * analytic(j, j) + analytic(i, j) * analytic(i, j)) /
                static_cast<double>(n));
            cmp.standard_errors.set(i, j, se);
            const double dev = std::abs(empirical(i, j) - analytic(i, j));
            cmp.max_abs_dev = std::max(cmp.max_abs_dev, dev);
            if (dev > se_multiplier * se) {
                cmp.flagged.push_back({i, j, dev, se});
            }
        }
    }
    return cmp;
}

}  // namespace covtrans

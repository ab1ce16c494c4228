#include "covtrans/precision_engine.hpp"

#include <cmath>
#include <stdexcept>

#include "covtrans/covariance_engine.hpp"
#include "covtrans/errors.hpp"
#include "covtrans/linalg.hpp"

namespace covtrans {

namespace {

constexpr int kOddSeriesCap = 63;

bool series_done(double term, double partial) {
    return term != 0.0 && std::abs(term) < kSeriesTolerance * (1.0 + std::abs(partial));
}

}  // namespace

NeumannInverse neumann_inverse(const SymMatrix& a) {
    const int d = a.dim();
    const SymMatrix b = a - SymMatrix::identity(d);
    const double delta = linalg::operator_norm_sym(b);
    if (!(delta < 1.0)) {
        throw EngineError("neumann_inverse: |B| must be < 1");
    }
    NeumannInverse result;
    result.inverse = linalg::pd_inverse(a);
    result.first_order = SymMatrix::identity(d) - b;
    result.tail_bound = delta * delta / (1.0 - delta);
    return result;
}

NearIdentityPrecision analyze_near_identity(const SymMatrix& gamma) {
    const int d = gamma.dim();
    for (int i = 0; i < d; ++i) {
        if (std::abs(gamma(i, i) - 1.0) > 1e-12) {
            throw NearIdentityError("analyze_near_identity: diagonal must be unit");
        }
    }
    SymMatrix b(d);
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            b.set(i, j, gamma(i, j));
        }
    }
    const double delta = linalg::operator_norm_sym(b);
    if (!(delta < 1.0)) {
        throw NearIdentityError("analyze_near_identity: |B| must be < 1");
    }
    NearIdentityPrecision prec;
    prec.gamma = gamma;
    prec.b_matrix = std::move(b);
    prec.delta = delta;
    prec.epsilon = delta / (1.0 - delta);
    return prec;
}

AnalysisConstants constants_for(const DerivativeSeries& f) {
    if (f.parity() != Parity::odd) {
        throw OddParityError("constants_for: requires an odd transformation");
    }
    const int cap = std::min(kOddSeriesCap, f.max_order());
    double kappa = 0.0;
    double inv_fact = 1.0;  // 1/k!
    for (int k = 1; k <= cap; k += 2) {
        if (k > 1) {
            inv_fact /= static_cast<double>(k) * (k - 1);
        }
        const double fk = eval_F(f, k, 0.5);
        const double term = fk * fk * inv_fact;
        kappa += term;
        if (series_done(term, kappa)) {
            break;
        }
    }
    AnalysisConstants constants;
    constants.kappa = kappa;
    constants.lambda = linear_coefficient(f);
    constants.inv_kappa = 1.0 / kappa;
    constants.lambda_over_kappa_sq = constants.lambda / (kappa * kappa);
    return constants;
}

TransformReport predict_and_compare(const NearIdentityPrecision& prec, const DerivativeSeries& f,
                                    double threshold) {
    if (f.parity() != Parity::odd) {
        throw OddParityError("predict_and_compare: requires an odd transformation");
    }
    const int d = prec.gamma.dim();
    TransformReport report;
    report.constants = constants_for(f);
    report.delta = prec.delta;
    report.epsilon = prec.epsilon;
    report.threshold = threshold;

    report.sigma_rho = linalg::pd_inverse(prec.gamma);
    report.sigma_pi = transform_covariance({report.sigma_rho, f});
    report.predicted_sigma =
        report.constants.kappa * SymMatrix::identity(d) - report.constants.lambda * prec.b_matrix;
    report.e_prime = report.sigma_pi - report.predicted_sigma;

    report.gamma_pi = linalg::pd_inverse(report.sigma_pi);
    report.predicted_gamma = report.constants.inv_kappa * SymMatrix::identity(d) +
                             report.constants.lambda_over_kappa_sq * prec.b_matrix;
    report.e_double_prime = report.gamma_pi - report.predicted_gamma;

    report.e_prime_opnorm = linalg::operator_norm_sym(report.e_prime);
    SymMatrix e1(d);
    SymMatrix e2(d);
    for (int i = 0; i < d; ++i) {
        e1.set(i, i, report.e_prime(i, i));
        for (int j = i + 1; j < d; ++j) {
            e2.set(i, j, report.e_prime(i, j));
        }
    }
    report.e_prime_diag_opnorm = linalg::operator_norm_sym(e1);
    report.e_prime_offdiag_opnorm = linalg::operator_norm_sym(e2);
    report.e_prime_offdiag_hsnorm = linalg::hilbert_schmidt_norm(e2);

    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            SparsityEntry entry;
            entry.i = i;
            entry.j = j;
            entry.value = report.gamma_pi(i, j);
            entry.structural_edge = std::abs(entry.value) > threshold;
            report.classification.push_back(entry);
        }
    }
    return report;
}

std::vector<ScalingRow> error_scaling_probe(const DerivativeSeries& f, const GraphSpec& graph,
                                            const std::vector<double>& weights) {
    std::vector<ScalingRow> rows;
    rows.reserve(weights.size());
    for (const double w : weights) {
        GraphSpec spec = graph;
        spec.weight = w;
        ScalingRow row;
        row.weight = w;
        if (w == 0.0) {
            // B = 0: sigma_rho = I, the prediction error reduces to the
            // diagonal deviation |tau_ii - kappa| = 0 at unit variance.
            row.delta = 0.0;
            row.epsilon = 0.0;
            const AnalysisConstants constants = constants_for(f);
            row.e_prime_norm = std::abs(transformed_diag(f, 1.0) - constants.kappa);
            row.ratio = 0.0;
        } else {
            const SymMatrix gamma = build_precision(spec);
            const NearIdentityPrecision prec = analyze_near_identity(gamma);
            const TransformReport report = predict_and_compare(prec, f);
            row.delta = prec.delta;
            row.epsilon = prec.epsilon;
            row.e_prime_norm = report.e_prime_opnorm;
            row.ratio = report.e_prime_opnorm / (prec.epsilon * prec.epsilon);
        }
        rows.push_back(row);
    }
    return rows;
}

double operator_norm(const SymMatrix& m) {
    return linalg::operator_norm_sym(m);
}

double hs_norm(const SymMatrix& m) {
    return linalg::hilbert_schmidt_norm(m);
}

}  // namespace covtrans

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "covtrans/covariance_engine.hpp"
#include "covtrans/errors.hpp"
#include "covtrans/linalg.hpp"
#include "covtrans/precision_engine.hpp"
#include "paper_fixtures.hpp"

using namespace covtrans;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("neumann inverse on the chain fixture", "[precision]") {
    const SymMatrix gamma = build_precision(fixtures::chain_spec());
    const auto result = neumann_inverse(gamma);
    REQUIRE(max_abs_diff(result.inverse, fixtures::chain_sigma_rho_published()) < 1e-4);
    REQUIRE_THAT(result.tail_bound, WithinRel(std::pow(1.0 / 11.0, 2) / (1.0 - 1.0 / 11.0), 1e-12));
    REQUIRE(operator_norm(result.inverse - result.first_order) <= result.tail_bound);
}

TEST_CASE("neumann inverse of the identity", "[precision]") {
    const auto result = neumann_inverse(SymMatrix::identity(4));
    REQUIRE(max_abs_diff(result.inverse, SymMatrix::identity(4)) < 1e-14);
    REQUIRE(result.tail_bound == 0.0);
}

TEST_CASE("neumann inverse matches the star closed form", "[precision]") {
    const auto spec = fixtures::star_spec();
    const auto result = neumann_inverse(build_precision(spec));
    REQUIRE(max_abs_diff(result.inverse, star_inverse_closed_form(spec)) < 1e-12);
    REQUIRE(max_abs_diff(result.inverse, fixtures::star_sigma_rho_published()) < 1e-4);
}

TEST_CASE("neumann hypothesis is enforced", "[precision]") {
    SymMatrix wide(2);
    wide.set(0, 0, 1.0);
    wide.set(1, 1, 1.0);
    wide.set(0, 1, 1.2);
    REQUIRE_THROWS_AS(neumann_inverse(wide), EngineError);
}

TEST_CASE("neumann sandwich holds on every fixture", "[precision]") {
    for (const auto& spec : {fixtures::chain_spec(), fixtures::star_spec(), fixtures::grid_spec()}) {
        const SymMatrix gamma = build_precision(spec);
        const auto prec = analyze_near_identity(gamma);
        const auto result = neumann_inverse(gamma);
        const double lhs = operator_norm(result.inverse - result.first_order);
        REQUIRE(lhs <= prec.delta * prec.delta / (1.0 - prec.delta));
    }
}

TEST_CASE("analyze_near_identity on the fixtures", "[precision]") {
    const auto chain = analyze_near_identity(build_precision(fixtures::chain_spec()));
    REQUIRE_THAT(chain.delta, WithinAbs(1.0 / 11.0, 1e-12));
    REQUIRE_THAT(chain.epsilon, WithinAbs(0.1, 1e-12));
    for (int i = 0; i < chain.b_matrix.dim(); ++i) {
        REQUIRE(chain.b_matrix(i, i) == 0.0);
        for (int j = 0; j < chain.b_matrix.dim(); ++j) {
            if (i != j) {
                REQUIRE(chain.gamma(i, j) == chain.b_matrix(i, j));
            }
        }
    }

    const auto eye = analyze_near_identity(SymMatrix::identity(5));
    REQUIRE(eye.delta == 0.0);
    REQUIRE(eye.epsilon == 0.0);

    // arrowhead eigenvalues are +-|b| and 0
    const auto star = analyze_near_identity(build_precision(fixtures::star_spec()));
    REQUIRE_THAT(star.delta, WithinAbs(2.0 / 11.0, 1e-12));
}

TEST_CASE("analyze_near_identity rejections", "[precision]") {
    SymMatrix scaled = SymMatrix::identity(3);
    scaled.set(0, 0, 1.5);
    REQUIRE_THROWS_AS(analyze_near_identity(scaled), NearIdentityError);

    SymMatrix wide = SymMatrix::identity(2);
    wide.set(0, 1, 1.01);
    REQUIRE_THROWS_AS(analyze_near_identity(wide), NearIdentityError);
}

TEST_CASE("constants for the builtins", "[precision]") {
    const auto sin_constants = constants_for(make_builtin(Builtin::sin));
    REQUIRE_THAT(sin_constants.kappa, WithinAbs((1.0 - std::exp(-2.0)) / 2.0, 1e-12));
    REQUIRE_THAT(sin_constants.kappa, WithinRel(std::exp(-1.0) * std::sinh(1.0), 1e-12));
    REQUIRE_THAT(sin_constants.lambda, WithinAbs(std::exp(-1.0), 1e-12));
    REQUIRE(sin_constants.inv_kappa > 2.313);
    REQUIRE(sin_constants.inv_kappa < 2.314);
    REQUIRE_THAT(sin_constants.lambda_over_kappa_sq,
                 WithinRel(sin_constants.lambda / (sin_constants.kappa * sin_constants.kappa),
                           1e-15));

    const auto id_constants = constants_for(make_builtin(Builtin::odd_monomial, 8, 0));
    REQUIRE(id_constants.kappa == 1.0);
    REQUIRE(id_constants.lambda == 1.0);

    // F_k(1/2) = sqrt(e) for every odd k, so kappa = e sinh 1
    const auto sinh_constants = constants_for(make_builtin(Builtin::sinh));
    REQUIRE_THAT(sinh_constants.kappa, WithinRel(std::exp(1.0) * std::sinh(1.0), 1e-12));
    REQUIRE_THAT(sinh_constants.lambda, WithinRel(std::exp(1.0), 1e-12));

    const DerivativeSeries even_f({0, 0, 2, 0}, Parity::even);
    REQUIRE_THROWS_AS(constants_for(even_f), OddParityError);
}

TEST_CASE("predict_and_compare on the chain fixture", "[precision]") {
    const auto prec = analyze_near_identity(build_precision(fixtures::chain_spec()));
    const auto report = predict_and_compare(prec, make_builtin(Builtin::sin));

    REQUIRE(max_abs_diff(report.gamma_pi, fixtures::chain_gamma_pi_published()) < 2e-3);
    for (int i = 0; i < 8; ++i) {
        REQUIRE_THAT(report.gamma_pi(i, i), WithinAbs(2.317, 2e-3));
    }
    // edge entries ~ lambda/kappa^2 (1/22); non-edges below the threshold
    for (const auto& entry : report.classification) {
        const int dist = std::min(entry.j - entry.i, 8 - (entry.j - entry.i));
        if (dist == 1) {
            REQUIRE(entry.structural_edge);
            REQUIRE_THAT(entry.value, WithinAbs(0.0895, 2e-3));
        } else {
            REQUIRE_FALSE(entry.structural_edge);
            REQUIRE(std::abs(entry.value) < 0.01);
        }
    }
}

TEST_CASE("predict_and_compare on the star fixture", "[precision]") {
    const auto prec = analyze_near_identity(build_precision(fixtures::star_spec()));
    const auto report = predict_and_compare(prec, make_builtin(Builtin::sin));
    REQUIRE(max_abs_diff(report.gamma_pi, fixtures::star_gamma_pi_published()) < 2e-3);
    REQUIRE(max_abs_diff(report.sigma_pi, fixtures::star_sigma_pi_published()) < 5e-4);
}

TEST_CASE("predict_and_compare on the grid fixture", "[precision]") {
    const auto prec = analyze_near_identity(build_precision(fixtures::grid_spec()));
    const auto report = predict_and_compare(prec, make_builtin(Builtin::sin), 0.02);
    REQUIRE(max_abs_diff(report.gamma_pi, fixtures::grid_gamma_pi_published()) < 2e-3);
    const SymMatrix gamma = prec.gamma;
    for (const auto& entry : report.classification) {
        if (gamma(entry.i, entry.j) == 0.0) {
            REQUIRE(std::abs(entry.value) < 0.02);
            REQUIRE_FALSE(entry.structural_edge);
        } else {
            REQUIRE(entry.structural_edge);
            REQUIRE_THAT(entry.value, WithinAbs(0.333, 2e-3));
        }
    }
}

TEST_CASE("lemma-scale prediction accuracy on the fixtures", "[precision]") {
    const auto f = make_builtin(Builtin::sin);
    const auto constants = constants_for(f);
    for (const auto& spec : {fixtures::chain_spec(), fixtures::star_spec(), fixtures::grid_spec()}) {
        const auto prec = analyze_near_identity(build_precision(spec));
        const auto report = predict_and_compare(prec, f);
        const double eps = prec.epsilon;
        const int d = prec.gamma.dim();
        for (int i = 0; i < d; ++i) {
            REQUIRE(std::abs(report.sigma_pi(i, i) - constants.kappa * report.sigma_rho(i, i)) <=
                    10.0 * eps * eps);
            for (int j = i + 1; j < d; ++j) {
                REQUIRE(std::abs(report.sigma_pi(i, j) -
                                 constants.lambda * report.sigma_rho(i, j)) <=
                        10.0 * eps * eps * eps);
            }
        }
    }
}

TEST_CASE("error split matches the report norms", "[precision]") {
    const auto prec = analyze_near_identity(build_precision(fixtures::chain_spec()));
    const auto report = predict_and_compare(prec, make_builtin(Builtin::sin));
    REQUIRE(report.e_prime_opnorm <=
            report.e_prime_diag_opnorm + report.e_prime_offdiag_opnorm + 1e-15);
    REQUIRE(report.e_prime_offdiag_opnorm <= report.e_prime_offdiag_hsnorm + 1e-15);
    REQUIRE(max_abs_diff(report.e_prime, report.sigma_pi - report.predicted_sigma) == 0.0);
    REQUIRE(max_abs_diff(report.e_double_prime, report.gamma_pi - report.predicted_gamma) == 0.0);
}

TEST_CASE("classification is invariant under halving the weights", "[precision]") {
    const auto f = make_builtin(Builtin::sin);
    const auto base = predict_and_compare(
        analyze_near_identity(build_precision(fixtures::chain_spec())), f);
    auto halved_spec = fixtures::chain_spec();
    halved_spec.weight *= 0.5;
    const auto halved = predict_and_compare(
        analyze_near_identity(build_precision(halved_spec)), f);
    REQUIRE(base.classification.size() == halved.classification.size());
    for (std::size_t n = 0; n < base.classification.size(); ++n) {
        REQUIRE(base.classification[n].structural_edge ==
                halved.classification[n].structural_edge);
    }
}

TEST_CASE("error scaling probe on the chain", "[precision]") {
    const auto rows = error_scaling_probe(
        make_builtin(Builtin::sin), {GraphKind::chain, 8, 0.0},
        {1.0 / 22.0, 1.0 / 44.0, 1.0 / 88.0});
    REQUIRE(rows.size() == 3);
    for (std::size_t n = 0; n < rows.size(); ++n) {
        REQUIRE(rows[n].ratio < 5.0);
        if (n > 0) {
            REQUIRE(rows[n].ratio <= 1.1 * rows[n - 1].ratio);
        }
    }
    REQUIRE_THAT(rows[0].epsilon, WithinAbs(0.1, 1e-12));
}

TEST_CASE("error scaling probe on the star", "[precision]") {
    const auto rows = error_scaling_probe(make_builtin(Builtin::sin),
                                          {GraphKind::star, 5, 0.0}, {1.0 / 11.0, 1.0 / 22.0});
    for (const auto& row : rows) {
        REQUIRE(row.ratio < 5.0);
    }
}

TEST_CASE("probe at weight zero", "[precision]") {
    const auto rows =
        error_scaling_probe(make_builtin(Builtin::sin), {GraphKind::chain, 8, 0.0}, {0.0});
    REQUIRE(rows[0].epsilon == 0.0);
    REQUIRE(rows[0].e_prime_norm <= 1e-14);
}

TEST_CASE("operator and Hilbert-Schmidt norms", "[precision]") {
    const SymMatrix eye = SymMatrix::identity(5);
    REQUIRE_THAT(operator_norm(eye), WithinAbs(1.0, 1e-14));
    REQUIRE_THAT(hs_norm(eye), WithinRel(std::sqrt(5.0), 1e-14));

    const SymMatrix chain_b =
        build_precision(fixtures::chain_spec()) - SymMatrix::identity(8);
    REQUIRE_THAT(operator_norm(chain_b), WithinAbs(1.0 / 11.0, 1e-12));

    const SymMatrix zero(3);
    REQUIRE(operator_norm(zero) == 0.0);
    REQUIRE(hs_norm(zero) == 0.0);

    REQUIRE(operator_norm(chain_b) <= hs_norm(chain_b));
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "covtrans/gaussian_moments.hpp"

using namespace covtrans;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("double factorial", "[moments]") {
    REQUIRE(double_factorial(5) == 15);
    REQUIRE(double_factorial(-1) == 1);
    REQUIRE(double_factorial(0) == 1);
    REQUIRE(double_factorial(8) == 384);
    REQUIRE(double_factorial(15) == 2027025);
    REQUIRE_THROWS_AS(double_factorial(-2), std::invalid_argument);
    REQUIRE_THROWS_AS(double_factorial(34), std::invalid_argument);
}

TEST_CASE("univariate moments", "[moments]") {
    REQUIRE(univariate_moment(3, 2.7) == 0.0);
    REQUIRE(univariate_moment(2, 1.7) == 1.7);
    REQUIRE(univariate_moment(4, 1.0) == 3.0);
    REQUIRE_THAT(univariate_moment(6, 2.0), WithinRel(15.0 * 8.0, 1e-14));
    REQUIRE_THROWS_AS(univariate_moment(2, 0.0), std::invalid_argument);
}

TEST_CASE("bivariate closed form on worked cases", "[moments]") {
    const double v = 1.3, w = 0.7, c = -0.4;
    REQUIRE_THAT(isserlis_bivariate({3, 3, v, w, c}),
                 WithinRel(9.0 * v * w * c + 6.0 * c * c * c, 1e-14));
    REQUIRE(isserlis_bivariate({1, 1, v, w, c}) == c);
    REQUIRE_THAT(isserlis_bivariate({2, 2, v, w, c}), WithinRel(v * w + 2.0 * c * c, 1e-14));
    REQUIRE(isserlis_bivariate({2, 1, v, w, c}) == 0.0);
    REQUIRE(isserlis_bivariate({0, 0, v, w, c}) == 1.0);
    REQUIRE_THROWS_AS(isserlis_bivariate({2, 2, 1.0, 1.0, 1.5}), std::invalid_argument);
}

TEST_CASE("pair-partition oracle on small cases", "[moments]") {
    REQUIRE(isserlis_oracle({1, 1, 1.0, 1.0, 0.3}) == 0.3);
    REQUIRE(isserlis_oracle({4, 0, 1.0, 1.0, 0.0}) == 3.0);
    REQUIRE_THAT(isserlis_oracle({3, 3, 1.0, 1.0, 0.2}), WithinRel(1.848, 1e-12));
    REQUIRE_THROWS_AS(isserlis_oracle({9, 8, 1.0, 1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("closed form equals the oracle over the parameter grid", "[moments]") {
    for (int p = 0; p <= 12; ++p) {
        for (int q = 0; p + q <= 12; ++q) {
            for (const double v : {0.5, 1.0, 2.0}) {
                for (const double w : {0.5, 1.0, 2.0}) {
                    for (const double c : {-0.4, 0.0, 0.3}) {
                        if (c * c > v * w) {
                            continue;
                        }
                        const double expected = isserlis_oracle({p, q, v, w, c});
                        const double got = isserlis_bivariate({p, q, v, w, c});
                        REQUIRE_THAT(got, WithinAbs(expected, 1e-12 * (1.0 + std::abs(expected))));
                    }
                }
            }
        }
    }
}

TEST_CASE("index symmetry", "[moments]") {
    for (int p = 0; p <= 8; ++p) {
        for (int q = 0; q <= 8; ++q) {
            const double a = isserlis_bivariate({p, q, 1.4, 0.6, 0.5});
            const double b = isserlis_bivariate({q, p, 0.6, 1.4, 0.5});
            REQUIRE_THAT(a, WithinAbs(b, 1e-12 * (1.0 + std::abs(b))));
        }
    }
}

TEST_CASE("independence factorization at zero covariance", "[moments]") {
    REQUIRE(isserlis_bivariate({3, 5, 1.2, 0.8, 0.0}) == 0.0);
    for (int p = 0; p <= 8; p += 2) {
        for (int q = 0; q <= 8; q += 2) {
            const double expected = univariate_moment(p, 1.2) * univariate_moment(q, 0.8);
            REQUIRE_THAT(isserlis_bivariate({p, q, 1.2, 0.8, 0.0}),
                         WithinAbs(expected, 1e-12 * (1.0 + std::abs(expected))));
        }
    }
}

TEST_CASE("bivariate form reduces to univariate moments", "[moments]") {
    for (int k = 0; k <= 16; k += 2) {
        const double expected = univariate_moment(k, 1.5);
        REQUIRE_THAT(isserlis_bivariate({k, 0, 1.5, 1.0, 0.0}),
                     WithinAbs(expected, 1e-12 * (1.0 + std::abs(expected))));
    }
}

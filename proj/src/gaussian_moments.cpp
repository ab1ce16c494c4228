#include "covtrans/gaussian_moments.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace covtrans {

namespace {

// Exact integer combinatorics in 128-bit arithmetic; n = 33 keeps 33! well
// inside the representable range.
constexpr int kMaxExactN = 33;

using u128 = unsigned __int128;

const std::array<u128, kMaxExactN + 1>& factorial_table() {
    static const auto table = [] {
        std::array<u128, kMaxExactN + 1> t{};
        t[0] = 1;
        for (int k = 1; k <= kMaxExactN; ++k) {
            t[k] = t[k - 1] * static_cast<u128>(k);
        }
        return t;
    }();
    return table;
}

u128 dfact_u128(int k) {
    // (-1)!! = 0!! = 1 by convention.
    u128 r = 1;
    for (int v = k; v > 1; v -= 2) {
        r *= static_cast<u128>(v);
    }
    return r;
}

u128 binom_u128(int n, int k) {
    const auto& fact = factorial_table();
    return fact[n] / (fact[k] * fact[n - k]);
}

double to_double(u128 v) {
    return static_cast<double>(v);
}

void validate(const BivariateMomentQuery& q) {
    if (q.p < 0 || q.q < 0) {
        throw std::invalid_argument("moment query: powers must be non-negative");
    }
    if (q.var_i <= 0.0 || q.var_j <= 0.0) {
        throw std::invalid_argument("moment query: variances must be positive");
    }
    if (q.cov * q.cov > q.var_i * q.var_j * (1.0 + 1e-12)) {
        throw std::invalid_argument("moment query: cov^2 must not exceed var_i * var_j");
    }
}

}  // namespace

std::int64_t double_factorial(int k) {
    if (k < -1) {
        throw std::invalid_argument("double_factorial: k must be >= -1");
    }
    if (k > kMaxExactN) {
        throw std::invalid_argument("double_factorial: k exceeds the exact-arithmetic guard (33)");
    }
    return static_cast<std::int64_t>(dfact_u128(k));
}

double univariate_moment(int k, double variance) {
    if (k < 0) {
        throw std::invalid_argument("univariate_moment: k must be >= 0");
    }
    if (variance <= 0.0) {
        throw std::invalid_argument("univariate_moment: variance must be positive");
    }
    if (k % 2 == 1) {
        return 0.0;
    }
    return std::pow(variance, k / 2) * to_double(dfact_u128(k - 1));
}

double isserlis_bivariate(const BivariateMomentQuery& q) {
    validate(q);
    const int n = q.p + q.q;
    if (n % 2 == 1) {
        return 0.0;
    }
    if (n == 0) {
        return 1.0;
    }
    if (n > kMaxExactN) {
        throw std::invalid_argument("isserlis_bivariate: p + q exceeds the exact-arithmetic guard");
    }
    const int p = q.p;
    const int r = q.q;  // n - p
    // Shared-covariance power k descends by 2 from min(p, n-p); when p and
    // n-p have opposite parity n is odd and we have already returned 0.
    double sum = 0.0;
    for (int k = std::min(p, r); k >= 0; k -= 2) {
        const u128 coeff = dfact_u128(p - k - 1) * binom_u128(p, k) * binom_u128(r, k) *
                           factorial_table()[k] * dfact_u128(r - k - 1);
        sum += to_double(coeff) * std::pow(q.var_i, (p - k) / 2) * std::pow(q.cov, k) *
               std::pow(q.var_j, (r - k) / 2);
    }
    return sum;
}

double isserlis_oracle(const BivariateMomentQuery& q) {
    validate(q);
    const int n = q.p + q.q;
    if (n > 16) {
        throw std::invalid_argument("isserlis_oracle: p + q must be <= 16");
    }
    if (n % 2 == 1) {
        return 0.0;
    }
    if (n == 0) {
        return 1.0;
    }

    // Variables 0..p-1 carry label i, the rest label j.
    std::vector<int> partner(n, -1);
    auto pair_cov = [&](int a, int b) {
        const bool ai = a < q.p;
        const bool bi = b < q.p;
        if (ai && bi) return q.var_i;
        if (!ai && !bi) return q.var_j;
        return q.cov;
    };

    double total = 0.0;
    auto recurse = [&](auto&& self, double product) -> void {
        int first = -1;
        for (int v = 0; v < n; ++v) {
            if (partner[v] < 0) {
                first = v;
                break;
            }
        }
        if (first < 0) {
            total += product;
            return;
        }
        for (int other = first + 1; other < n; ++other) {
            if (partner[other] >= 0) {
                continue;
            }
            partner[first] = other;
            partner[other] = first;
            self(self, product * pair_cov(first, other));
            partner[first] = -1;
            partner[other] = -1;
        }
    };
    recurse(recurse, 1.0);
    return total;
}

}  // namespace covtrans

#include "covtrans/derivative_series.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "covtrans/errors.hpp"

namespace covtrans {

namespace {

bool series_done(double term, double partial) {
    return term != 0.0 && std::abs(term) < kSeriesTolerance * (1.0 + std::abs(partial));
}

void require_odd(const DerivativeSeries& f, const char* op) {
    if (f.parity() != Parity::odd) {
        throw OddParityError(std::string(op) + ": requires a series with odd parity");
    }
}

}  // namespace

DerivativeSeries::DerivativeSeries(std::vector<double> derivs, Parity parity,
                                   std::optional<double> growth_bound, std::string name)
    : derivs_(std::move(derivs)),
      parity_(parity),
      growth_bound_(growth_bound),
      name_(std::move(name)) {
    if (derivs_.size() < 3) {
        throw std::invalid_argument("DerivativeSeries: truncation order must be >= 2");
    }
    if (derivs_[0] != 0.0) {
        throw std::invalid_argument("DerivativeSeries: f(0) must equal 0 (mean-preserving)");
    }
    for (std::size_t k = 1; k < derivs_.size(); ++k) {
        const bool even_index = (k % 2 == 0);
        if (parity_ == Parity::odd && even_index && derivs_[k] != 0.0) {
            throw std::invalid_argument(
                "DerivativeSeries: odd parity requires zero even-order derivatives");
        }
        if (parity_ == Parity::even && !even_index && derivs_[k] != 0.0) {
            throw std::invalid_argument(
                "DerivativeSeries: even parity requires zero odd-order derivatives");
        }
    }
    if (growth_bound_) {
        for (const double d : derivs_) {
            if (std::abs(d) > *growth_bound_) {
                throw std::invalid_argument(
                    "DerivativeSeries: derivative exceeds the declared growth bound");
            }
        }
    }
}

DerivativeSeries make_builtin(Builtin fn, int max_order, int monomial_degree) {
    if (max_order < 3) {
        throw std::invalid_argument("make_builtin: max_order must be >= 3");
    }
    std::vector<double> d(static_cast<std::size_t>(max_order) + 1, 0.0);
    switch (fn) {
        case Builtin::sin:
            for (int u = 0; 2 * u + 1 <= max_order; ++u) {
                d[2 * u + 1] = (u % 2 == 0) ? 1.0 : -1.0;
            }
            return {std::move(d), Parity::odd, 1.0, "sin"};
        case Builtin::sinh:
            for (int u = 0; 2 * u + 1 <= max_order; ++u) {
                d[2 * u + 1] = 1.0;
            }
            return {std::move(d), Parity::odd, 1.0, "sinh"};
        case Builtin::cube:
            d[3] = 6.0;
            return {std::move(d), Parity::odd, 6.0, "cube"};
        case Builtin::odd_monomial: {
            if (monomial_degree < 0 || 2 * monomial_degree + 1 > max_order) {
                throw std::invalid_argument(
                    "make_builtin: odd_monomial requires l >= 0 and 2l+1 <= max_order");
            }
            d[2 * monomial_degree + 1] = 1.0;
            return {std::move(d), Parity::odd, 1.0,
                    "odd_monomial(" + std::to_string(monomial_degree) + ")"};
        }
    }
    throw std::invalid_argument("make_builtin: unknown builtin");
}

DerivativeSeries make_builtin_by_name(const std::string& name, int max_order) {
    if (name == "sin") return make_builtin(Builtin::sin, max_order);
    if (name == "sinh") return make_builtin(Builtin::sinh, max_order);
    if (name == "cube") return make_builtin(Builtin::cube, max_order);
    if (name == "identity") return make_builtin(Builtin::odd_monomial, max_order, 0);
    if (name.rfind("odd_monomial(", 0) == 0 && name.back() == ')') {
        const std::string inner = name.substr(13, name.size() - 14);
        char* end = nullptr;
        const long l = std::strtol(inner.c_str(), &end, 10);
        if (end && *end == '\0' && !inner.empty()) {
            return make_builtin(Builtin::odd_monomial, max_order, static_cast<int>(l));
        }
    }
    throw std::invalid_argument("make_builtin_by_name: unknown function '" + name + "'");
}

bool is_builtin_name(const std::string& name) {
    if (name == "sin" || name == "sinh" || name == "cube" || name == "identity") {
        return true;
    }
    return name.rfind("odd_monomial(", 0) == 0 && name.back() == ')';
}

DerivativeSeries square_series(const DerivativeSeries& f) {
    const int order = f.max_order();
    std::vector<double> g(static_cast<std::size_t>(order) + 1, 0.0);
    for (int n = 0; n <= order; ++n) {
        double binom = 1.0;
        double sum = 0.0;
        for (int p = 0; p <= n; ++p) {
            sum += binom * f.deriv(p) * f.deriv(n - p);
            binom = binom * static_cast<double>(n - p) / static_cast<double>(p + 1);
        }
        g[n] = sum;
    }
    std::string name = f.name().empty() ? std::string{} : "square(" + f.name() + ")";
    return {std::move(g), Parity::even, std::nullopt, std::move(name)};
}

double eval_F(const DerivativeSeries& f, int k, double x) {
    if (k < 1 || k % 2 == 0) {
        throw std::invalid_argument("eval_F: k must be odd and >= 1");
    }
    require_odd(f, "eval_F");
    double sum = 0.0;
    double x_pow_over_fact = 1.0;  // x^u / u!
    for (int u = 0; 2 * u + k <= f.max_order(); ++u) {
        if (u > 0) {
            x_pow_over_fact *= x / static_cast<double>(u);
        }
        const double term = f.deriv(2 * u + k) * x_pow_over_fact;
        sum += term;
        if (series_done(term, sum)) {
            break;
        }
    }
    return sum;
}

double eval_G(const DerivativeSeries& f, int k, double var_i, double var_j, double x) {
    if (var_i <= 0.0 || var_j <= 0.0) {
        throw std::invalid_argument("eval_G: variances must be positive");
    }
    return eval_F(f, k, var_i * x) * eval_F(f, k, var_j * x);
}

CoefficientTable coefficient_table(const DerivativeSeries& f) {
    const DerivativeSeries g = square_series(f);
    CoefficientTable table;
    const int half = f.max_order() / 2;
    table.a.resize(half + 1);
    table.b.resize(half + 1);
    double dfact_over_fact = 1.0;  // (k-1)!!/k! at even k; equals 1/(k!!)
    for (int m = 0; m <= half; ++m) {
        const int k = 2 * m;
        if (m > 0) {
            dfact_over_fact /= static_cast<double>(k);  // k!! = (k-2)!! * k
        }
        table.a[m] = f.deriv(k) * dfact_over_fact;
        table.b[m] = g.deriv(k) * dfact_over_fact;
    }
    return table;
}

double linear_coefficient(const DerivativeSeries& f) {
    require_odd(f, "linear_coefficient");
    const double f_half = eval_F(f, 1, 0.5);
    return f_half * f_half;
}

double evaluate_taylor(const DerivativeSeries& f, double x) {
    double sum = 0.0;
    double x_pow_over_fact = 1.0;  // x^k / k!
    for (int k = 0; k <= f.max_order(); ++k) {
        if (k > 0) {
            x_pow_over_fact *= x / static_cast<double>(k);
        }
        sum += f.deriv(k) * x_pow_over_fact;
    }
    return sum;
}

}  // namespace covtrans

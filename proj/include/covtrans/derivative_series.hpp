#pragma once

#include <optional>
#include <string>
#include <vector>

namespace covtrans {

enum class Parity { odd, even, general };

enum class Builtin { sin, sinh, cube, odd_monomial };

/// Default truncation order for derivative sequences. 64 terms exceed
/// double-precision resolution for the argument ranges used here.
inline constexpr int kDefaultMaxOrder = 64;

/// Term-magnitude stopping rule for every series sum in the library: a sum
/// terminates once a *nonzero* term drops below this tolerance times
/// (1 + |partial sum|), or the index reaches the truncation order. Exact-zero
/// terms never terminate a sum (sparse sequences such as x^3 interleave
/// structural zeros with their leading coefficients).
inline constexpr double kSeriesTolerance = 1e-14;

/// A univariate transformation represented by its unnormalized derivatives
/// at zero: derivs[k] = f^(k)(0). Mean preservation (f(0) = 0) and the
/// declared parity pattern are enforced at construction; instances are
/// immutable afterwards.
class DerivativeSeries {
public:
    DerivativeSeries(std::vector<double> derivs, Parity parity,
                     std::optional<double> growth_bound = std::nullopt,
                     std::string name = {});

    [[nodiscard]] int max_order() const noexcept { return static_cast<int>(derivs_.size()) - 1; }

    /// f^(k)(0); zero for k beyond the stored truncation order.
    [[nodiscard]] double deriv(int k) const noexcept {
        return (k >= 0 && k < static_cast<int>(derivs_.size())) ? derivs_[k] : 0.0;
    }

    [[nodiscard]] Parity parity() const noexcept { return parity_; }
    [[nodiscard]] const std::optional<double>& growth_bound() const noexcept { return growth_bound_; }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const std::vector<double>& derivs() const noexcept { return derivs_; }

private:
    std::vector<double> derivs_;
    Parity parity_ = Parity::general;
    std::optional<double> growth_bound_;
    std::string name_;
};

/// Mean-series coefficients a[m] = a_{2m} and variance-series coefficients
/// b[m] = b_{2m}, both indexed by half the (even) series index.
struct CoefficientTable {
    std::vector<double> a;
    std::vector<double> b;
};

/// Exact derivative sequences of the built-in odd transformations.
/// monomial_degree selects l for odd_monomial (f(x) = x^{2l+1}/(2l+1)!,
/// l = 0 being the identity) and is ignored otherwise.
DerivativeSeries make_builtin(Builtin fn, int max_order = kDefaultMaxOrder, int monomial_degree = 0);

/// Parses "sin", "sinh", "cube", "identity" or "odd_monomial(L)".
DerivativeSeries make_builtin_by_name(const std::string& name, int max_order = kDefaultMaxOrder);

[[nodiscard]] bool is_builtin_name(const std::string& name);

/// g = f^2 via the Leibniz product rule:
/// g^(n)(0) = sum_p C(n,p) f^(p)(0) f^(n-p)(0). Parity of the result is even.
DerivativeSeries square_series(const DerivativeSeries& f);

/// F_k(x) = sum_u f^(2u+k)(0) x^u / u! for odd k >= 1 (terms beyond the
/// truncation order are zero). Requires odd parity.
double eval_F(const DerivativeSeries& f, int k, double x);

/// G_kij(x) = F_k(var_i * x) * F_k(var_j * x).
double eval_G(const DerivativeSeries& f, int k, double var_i, double var_j, double x);

/// All a_k = f^(k)(0) (k-1)!!/k! and b_n = (n-1)!! g^(n)(0)/n! for even
/// indices up to the truncation order.
CoefficientTable coefficient_table(const DerivativeSeries& f);

/// Unit-variance linear-response coefficient F^2(1/2), identical to
/// eval_G(f, 1, 1, 1, 1/2). Requires odd parity.
double linear_coefficient(const DerivativeSeries& f);

/// Truncated Taylor evaluation sum_k f^(k)(0) x^k / k!.
double evaluate_taylor(const DerivativeSeries& f, double x);

}  // namespace covtrans

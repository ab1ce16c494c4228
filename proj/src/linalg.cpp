#include "covtrans/linalg.hpp"

#include <cmath>
#include <cstddef>

#include <Eigen/Dense>

#include "covtrans/errors.hpp"

namespace covtrans::linalg {

std::optional<std::vector<double>> cholesky_lower(const SymMatrix& m, double pivot_tol) {
    const int d = m.dim();
    std::vector<double> lower(static_cast<std::size_t>(d) * d, 0.0);
    auto at = [&](int i, int j) -> double& {
        return lower[static_cast<std::size_t>(i) * d + j];
    };
    for (int j = 0; j < d; ++j) {
        double diag = m(j, j);
        for (int k = 0; k < j; ++k) {
            diag -= at(j, k) * at(j, k);
        }
        if (!(diag > pivot_tol)) {
            return std::nullopt;
        }
        const double pivot = std::sqrt(diag);
        at(j, j) = pivot;
        for (int i = j + 1; i < d; ++i) {
            double s = m(i, j);
            for (int k = 0; k < j; ++k) {
                s -= at(i, k) * at(j, k);
            }
            at(i, j) = s / pivot;
        }
    }
    return lower;
}

bool is_positive_definite(const SymMatrix& m, double pivot_tol) {
    return cholesky_lower(m, pivot_tol).has_value();
}

bool certify_positive_definite(SymMatrix& m, double pivot_tol) {
    if (is_positive_definite(m, pivot_tol)) {
        m.mark_positive_definite();
        return true;
    }
    return false;
}

SymMatrix pd_inverse(const SymMatrix& m) {
    const int d = m.dim();
    const auto chol = cholesky_lower(m);
    if (!chol) {
        throw EngineError("pd_inverse: matrix is not positive definite");
    }
    const auto& lower = *chol;
    auto lw = [&](int i, int j) { return lower[static_cast<std::size_t>(i) * d + j]; };

    // Solve L L^T X = I one unit column at a time.
    std::vector<double> inv(static_cast<std::size_t>(d) * d, 0.0);
    std::vector<double> y(d), x(d);
    for (int col = 0; col < d; ++col) {
        for (int i = 0; i < d; ++i) {
            double s = (i == col) ? 1.0 : 0.0;
            for (int k = 0; k < i; ++k) {
                s -= lw(i, k) * y[k];
            }
            y[i] = s / lw(i, i);
        }
        for (int i = d - 1; i >= 0; --i) {
            double s = y[i];
            for (int k = i + 1; k < d; ++k) {
                s -= lw(k, i) * x[k];
            }
            x[i] = s / lw(i, i);
        }
        for (int i = 0; i < d; ++i) {
            inv[static_cast<std::size_t>(i) * d + col] = x[i];
        }
    }

    SymMatrix out(d);
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            const double a = inv[static_cast<std::size_t>(i) * d + j];
            const double b = inv[static_cast<std::size_t>(j) * d + i];
            out.set(i, j, 0.5 * (a + b));
        }
    }
    return out;
}

std::vector<double> symmetric_eigenvalues(const SymMatrix& m) {
    const int d = m.dim();
    Eigen::MatrixXd a(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            a(i, j) = m(i, j);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw EngineError("symmetric_eigenvalues: eigendecomposition failed");
    }
    std::vector<double> ev(d);
    for (int i = 0; i < d; ++i) {
        ev[i] = solver.eigenvalues()(i);
    }
    return ev;
}

double operator_norm_sym(const SymMatrix& m) {
    const auto ev = symmetric_eigenvalues(m);
    double norm = 0.0;
    for (const double v : ev) {
        norm = std::max(norm, std::abs(v));
    }
    return norm;
}

double hilbert_schmidt_norm(const SymMatrix& m) {
    double s = 0.0;
    for (const double v : m.data()) {
        s += v * v;
    }
    return std::sqrt(s);
}

}  // namespace covtrans::linalg

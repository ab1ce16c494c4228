#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace covtrans {

/// Dense symmetric matrix. Writes go through set(), which stores both
/// mirror entries, so entries(i,j) == entries(j,i) holds bit-exactly at all
/// times. The positive-definiteness flag is only raised by a successful
/// definiteness check (see linalg::certify_positive_definite).
class SymMatrix {
public:
    SymMatrix() = default;

    explicit SymMatrix(int dim) {
        if (dim < 1) {
            throw std::invalid_argument("SymMatrix: dimension must be >= 1");
        }
        dim_ = dim;
        data_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0);
    }

    static SymMatrix identity(int dim) {
        SymMatrix m(dim);
        for (int i = 0; i < dim; ++i) {
            m.set(i, i, 1.0);
        }
        return m;
    }

    [[nodiscard]] int dim() const noexcept { return dim_; }

    [[nodiscard]] double operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * dim_ + static_cast<std::size_t>(j)];
    }

    void set(int i, int j, double value) {
        check_index(i);
        check_index(j);
        data_[static_cast<std::size_t>(i) * dim_ + static_cast<std::size_t>(j)] = value;
        data_[static_cast<std::size_t>(j) * dim_ + static_cast<std::size_t>(i)] = value;
        pd_certified_ = false;
    }

    [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

    [[nodiscard]] bool positive_definite_flag() const noexcept { return pd_certified_; }

    /// Raise the PD flag. Callers must have certified definiteness first
    /// (Cholesky with positive pivots or a smallest-eigenvalue check).
    void mark_positive_definite() noexcept { pd_certified_ = true; }

    friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
        return a.dim_ == b.dim_ && a.data_ == b.data_;
    }

private:
    void check_index(int i) const {
        if (i < 0 || i >= dim_) {
            throw std::out_of_range("SymMatrix: index out of range");
        }
    }

    int dim_ = 0;
    std::vector<double> data_;
    bool pd_certified_ = false;
};

inline SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("SymMatrix: dimension mismatch");
    }
    SymMatrix out(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = i; j < a.dim(); ++j) {
            out.set(i, j, a(i, j) + b(i, j));
        }
    }
    return out;
}

inline SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("SymMatrix: dimension mismatch");
    }
    SymMatrix out(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = i; j < a.dim(); ++j) {
            out.set(i, j, a(i, j) - b(i, j));
        }
    }
    return out;
}

inline SymMatrix operator*(double s, const SymMatrix& a) {
    SymMatrix out(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = i; j < a.dim(); ++j) {
            out.set(i, j, s * a(i, j));
        }
    }
    return out;
}

/// Largest entrywise absolute difference.
inline double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("SymMatrix: dimension mismatch");
    }
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            const double d = a(i, j) - b(i, j);
            m = d > m ? d : (-d > m ? -d : m);
        }
    }
    return m;
}

}  // namespace covtrans

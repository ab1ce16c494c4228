#include "covtrans/graph_factory.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "covtrans/errors.hpp"
#include "covtrans/linalg.hpp"

namespace covtrans {

namespace {

SymMatrix assemble(const GraphSpec& spec) {
    switch (spec.kind) {
        case GraphKind::chain: {
            const int d = spec.dim_param;
            SymMatrix m = SymMatrix::identity(d);
            for (int i = 0; i < d; ++i) {
                m.set(i, (i + 1) % d, spec.weight);
            }
            return m;
        }
        case GraphKind::star: {
            const int d = spec.dim_param;
            SymMatrix m = SymMatrix::identity(d);
            for (int j = 1; j < d; ++j) {
                m.set(0, j, spec.weight);
            }
            return m;
        }
        case GraphKind::grid: {
            const int side = spec.dim_param;
            const int d = side * side;
            SymMatrix m = SymMatrix::identity(d);
            auto node = [side](int r, int c) { return r * side + c; };
            for (int r = 0; r < side; ++r) {
                for (int c = 0; c < side; ++c) {
                    if (c + 1 < side) {
                        m.set(node(r, c), node(r, c + 1), spec.weight);
                    }
                    if (r + 1 < side) {
                        m.set(node(r, c), node(r + 1, c), spec.weight);
                    }
                }
            }
            return m;
        }
    }
    throw std::invalid_argument("build_precision: unknown graph kind");
}

void validate(const GraphSpec& spec) {
    switch (spec.kind) {
        case GraphKind::chain:
            if (spec.dim_param < 3) {
                throw std::invalid_argument("chain: dimension must be >= 3");
            }
            if (!(std::abs(spec.weight) < 0.5)) {
                throw EngineError("chain: |weight| must be < 1/2 for positive-definiteness");
            }
            return;
        case GraphKind::star:
            if (spec.dim_param < 2) {
                throw std::invalid_argument("star: dimension must be >= 2");
            }
            if (!((spec.dim_param - 1) * spec.weight * spec.weight < 1.0)) {
                throw EngineError("star: (d-1) weight^2 must be < 1 for positive-definiteness");
            }
            return;
        case GraphKind::grid:
            if (spec.dim_param < 2) {
                throw std::invalid_argument("grid: side length must be >= 2");
            }
            if (!(std::abs(spec.weight) < 0.25)) {
                throw EngineError("grid: |weight| must be < 1/4 for positive-definiteness");
            }
            return;
    }
    throw std::invalid_argument("build_precision: unknown graph kind");
}

}  // namespace

SymMatrix build_precision(const GraphSpec& spec) {
    validate(spec);
    SymMatrix m = assemble(spec);
    if (!linalg::certify_positive_definite(m)) {
        throw EngineError("build_precision: generated matrix failed the definiteness check");
    }
    return m;
}

SymMatrix build_precision_unchecked(const GraphSpec& spec) {
    if (spec.dim_param < 2) {
        throw std::invalid_argument("build_precision_unchecked: dimension too small");
    }
    return assemble(spec);
}

SymMatrix star_inverse_closed_form(const GraphSpec& spec) {
    if (spec.kind != GraphKind::star) {
        throw std::invalid_argument("star_inverse_closed_form: spec is not a star");
    }
    const int d = spec.dim_param;
    const double b = spec.weight;
    const double b_norm_sq = (d - 1) * b * b;
    if (!(b_norm_sq < 1.0)) {
        throw EngineError("star_inverse_closed_form: |b|^2 must be < 1");
    }
    const double scale = 1.0 / (1.0 - b_norm_sq);
    SymMatrix out(d);
    out.set(0, 0, scale);
    for (int j = 1; j < d; ++j) {
        out.set(0, j, -scale * b);
        out.set(j, j, scale * ((1.0 - b_norm_sq) + b * b));
        for (int k = j + 1; k < d; ++k) {
            out.set(j, k, scale * b * b);
        }
    }
    return out;
}

SymMatrix grid_covariance_closed_form(const GraphSpec& spec) {
    if (spec.kind != GraphKind::grid) {
        throw std::invalid_argument("grid_covariance_closed_form: spec is not a grid");
    }
    if (spec.dim_param != 3) {
        throw std::invalid_argument(
            "grid_covariance_closed_form: only the side-3 grid has a closed form");
    }
    const double alpha = spec.weight;
    if (!(alpha > 0.0 && alpha < 0.25)) {
        throw EngineError("grid_covariance_closed_form: weight must lie in (0, 1/4)");
    }

    Eigen::Matrix3d c;
    c << 1.0 / alpha, 1.0, 0.0,  //
        1.0, 1.0 / alpha, 1.0,   //
        0.0, 1.0, 1.0 / alpha;
    const Eigen::Matrix3d c_inv = c.inverse();
    const Eigen::Matrix3d e = (2.0 * Eigen::Matrix3d::Identity() - c * c).inverse();
    const Eigen::Matrix3d eye = Eigen::Matrix3d::Identity();

    Eigen::Matrix<double, 9, 9> blocks;
    blocks.block<3, 3>(0, 0) = c_inv * (eye - e);
    blocks.block<3, 3>(0, 3) = e;
    blocks.block<3, 3>(0, 6) = -c_inv * e;
    blocks.block<3, 3>(3, 0) = e;
    blocks.block<3, 3>(3, 3) = -c * e;
    blocks.block<3, 3>(3, 6) = e;
    blocks.block<3, 3>(6, 0) = -c_inv * e;
    blocks.block<3, 3>(6, 3) = e;
    blocks.block<3, 3>(6, 6) = c_inv * (eye - e);
    blocks /= alpha;

    SymMatrix out(9);
    for (int i = 0; i < 9; ++i) {
        for (int j = i; j < 9; ++j) {
            out.set(i, j, 0.5 * (blocks(i, j) + blocks(j, i)));
        }
    }
    return out;
}

bool check_positive_definite(const SymMatrix& m) {
    return linalg::is_positive_definite(m, 1e-12);
}

}  // namespace covtrans

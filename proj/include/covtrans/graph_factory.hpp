#pragma once

#include "covtrans/sym_matrix.hpp"

namespace covtrans {

enum class GraphKind { chain, star, grid };

/// Generator description for the three precision families. dim_param is the
/// node count d for chain/star and the side length m for grid (d = m^2);
/// weight is the off-diagonal edge weight.
struct GraphSpec {
    GraphKind kind = GraphKind::chain;
    int dim_param = 0;
    double weight = 0.0;
};

/// Unit-diagonal precision with the family's sparsity pattern:
///   chain: circulant, weight on the adjacent off-diagonals and corners
///   star:  weight in row/column 0
///   grid:  weight on 4-neighbor pairs under row-major node ordering
/// Parameters are validated against the family's positive-definiteness
/// range (chain |w| < 1/2, star (d-1) w^2 < 1, grid |w| < 1/4) and the
/// result is Cholesky-certified.
SymMatrix build_precision(const GraphSpec& spec);

/// Assembles the same pattern without the parameter validation or the
/// certification; used for boundary probing outside the valid range.
SymMatrix build_precision_unchecked(const GraphSpec& spec);

/// Closed-form star covariance
///   (1/(1-|b|^2)) [[1, -b^T], [-b, (1-|b|^2) I + b b^T]],  b = weight * 1.
SymMatrix star_inverse_closed_form(const GraphSpec& spec);

/// Closed-form 9x9 grid covariance assembled from the block expression in
/// terms of C = tridiag(1, 1/w, 1) and (2I - C^2)^{-1}; only the side-3
/// grid has this form, other sides must invert numerically.
SymMatrix grid_covariance_closed_form(const GraphSpec& spec);

/// True iff Cholesky factorization succeeds with all pivots > 1e-12.
bool check_positive_definite(const SymMatrix& m);

}  // namespace covtrans

#pragma once

// Golden fixtures for the three reference graphs: the published matrices the
// engine must reproduce, plus small builders shared across the test suites.

#include <algorithm>
#include <vector>

#include "covtrans/graph_factory.hpp"
#include "covtrans/sym_matrix.hpp"

namespace fixtures {

inline covtrans::GraphSpec chain_spec() {
    return {covtrans::GraphKind::chain, 8, 1.0 / 22.0};
}

inline covtrans::GraphSpec star_spec() {
    return {covtrans::GraphKind::star, 5, 1.0 / 11.0};
}

inline covtrans::GraphSpec grid_spec() {
    return {covtrans::GraphKind::grid, 3, 1.0 / 6.0};
}

/// Symmetric circulant from its first row bands (band[0] = diagonal).
inline covtrans::SymMatrix circulant_from_bands(int d, const std::vector<double>& bands) {
    covtrans::SymMatrix m(d);
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            const int k = std::min(j - i, d - (j - i));
            m.set(i, j, k < static_cast<int>(bands.size()) ? bands[k] : 0.0);
        }
    }
    return m;
}

/// Star-pattern matrix from its four distinct values.
inline covtrans::SymMatrix star_matrix(int d, double hub, double hub_leaf, double leaf,
                                       double leaf_leaf) {
    covtrans::SymMatrix m(d);
    m.set(0, 0, hub);
    for (int j = 1; j < d; ++j) {
        m.set(0, j, hub_leaf);
        m.set(j, j, leaf);
        for (int k = j + 1; k < d; ++k) {
            m.set(j, k, leaf_leaf);
        }
    }
    return m;
}

inline covtrans::SymMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    const int d = static_cast<int>(rows.size());
    covtrans::SymMatrix m(d);
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

// chain(8, 1/22): published matrices, circulant bands rounded to 1e-4
inline covtrans::SymMatrix chain_sigma_rho_published() {
    return circulant_from_bands(8, {1.0042, -0.0457, 0.0021, -0.0001, 0.0});
}

inline covtrans::SymMatrix chain_sigma_pi_published() {
    return circulant_from_bands(8, {0.4329, -0.0168, 0.0008, 0.0, 0.0});
}

inline covtrans::SymMatrix chain_gamma_pi_published() {
    return circulant_from_bands(8, {2.317, 0.0895, -0.0006, 0.0, 0.0});
}

// star(5, 1/11)
inline covtrans::SymMatrix star_sigma_rho_published() {
    return star_matrix(5, 1.0342, -0.094, 1.0085, 0.0085);
}

inline covtrans::SymMatrix star_sigma_pi_published() {
    return star_matrix(5, 0.4368, -0.0339, 0.4335, 0.0031);
}

inline covtrans::SymMatrix star_gamma_pi_published() {
    return star_matrix(5, 2.3451, 0.1795, 2.3212, -0.0025);
}

// grid(3, 1/6)
inline covtrans::SymMatrix grid_sigma_rho_published() {
    return from_rows({
        {1.0651, -0.1954, 0.0357, -0.1954, 0.0714, -0.0189, 0.0357, -0.0189, 0.0063},
        {-0.1954, 1.1008, -0.1954, 0.0714, -0.2143, 0.0714, -0.0189, 0.0420, -0.0189},
        {0.0357, -0.1954, 1.0651, -0.0189, 0.0714, -0.1954, 0.0063, -0.0189, 0.0357},
        {-0.1954, 0.0714, -0.0189, 1.1008, -0.2143, 0.0420, -0.1954, 0.0714, -0.0189},
        {0.0714, -0.2143, 0.0714, -0.2143, 1.1429, -0.2143, 0.0714, -0.2143, 0.0714},
        {-0.0189, 0.0714, -0.1954, 0.0420, -0.2143, 1.1008, -0.0189, 0.0714, -0.1954},
        {0.0357, -0.0189, 0.0063, -0.1954, 0.0714, -0.0189, 1.0651, -0.1954, 0.0357},
        {-0.0189, 0.0420, -0.0189, 0.0714, -0.2143, 0.0714, -0.1954, 1.1008, -0.1954},
        {0.0063, -0.0189, 0.0357, -0.0189, 0.0714, -0.1954, 0.0357, -0.1954, 1.0651},
    });
}

inline covtrans::SymMatrix grid_sigma_pi_published() {
    return from_rows({
        {0.4406, -0.0666, 0.0123, -0.0666, 0.0237, -0.0064, 0.0123, -0.0064, 0.0022},
        {-0.0666, 0.4447, -0.0666, 0.0238, -0.0703, 0.0238, -0.0064, 0.0140, -0.0064},
        {0.0123, -0.0666, 0.4406, -0.0064, 0.0237, -0.0666, 0.0022, -0.0064, 0.0123},
        {-0.0666, 0.0238, -0.0064, 0.4447, -0.0703, 0.0140, -0.0666, 0.0238, -0.0064},
        {0.0237, -0.0703, 0.0237, -0.0703, 0.4491, -0.0703, 0.0237, -0.0703, 0.0237},
        {-0.0064, 0.0238, -0.0666, 0.0140, -0.0703, 0.4447, -0.0064, 0.0238, -0.0666},
        {0.0123, -0.0064, 0.0022, -0.0666, 0.0237, -0.0064, 0.4406, -0.0666, 0.0123},
        {-0.0064, 0.0140, -0.0064, 0.0238, -0.0703, 0.0238, -0.0666, 0.4447, -0.0666},
        {0.0022, -0.0064, 0.0123, -0.0064, 0.0237, -0.0666, 0.0123, -0.0666, 0.4406},
    });
}

inline covtrans::SymMatrix grid_gamma_pi_published() {
    return from_rows({
        {2.3718, 0.3325, -0.0099, 0.3325, -0.0197, 0.0011, -0.0099, 0.0011, -0.0001},
        {0.3325, 2.4035, 0.3325, -0.0199, 0.3332, -0.0199, 0.0011, -0.0108, 0.0011},
        {-0.0099, 0.3325, 2.3718, 0.0011, -0.0197, 0.3325, -0.0001, 0.0011, -0.0099},
        {0.3325, -0.0199, 0.0011, 2.4035, 0.3332, -0.0108, 0.3325, -0.0199, 0.0011},
        {-0.0197, 0.3332, -0.0197, 0.3332, 2.4392, 0.3332, -0.0197, 0.3332, -0.0197},
        {0.0011, -0.0199, 0.3325, -0.0108, 0.3332, 2.4035, 0.0011, -0.0199, 0.3325},
        {-0.0099, 0.0011, -0.0001, 0.3325, -0.0197, 0.0011, 2.3718, 0.3325, -0.0099},
        {0.0011, -0.0108, 0.0011, -0.0199, 0.3332, -0.0199, 0.3325, 2.4035, 0.3325},
        {-0.0001, 0.0011, -0.0099, 0.0011, -0.0197, 0.3325, -0.0099, 0.3325, 2.3718},
    });
}

}  // namespace fixtures

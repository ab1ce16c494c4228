#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "covtrans/sym_matrix.hpp"

namespace covtrans::io {

struct PgmImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major, maxval 255
};

/// Grayscale map of absolute entry magnitudes: intensity
/// 255 * (1 - |m_ij| / max |m|), so the largest-magnitude cell is darkest.
/// An all-zero matrix renders uniform white. cell_size replicates each cell
/// into a cell_size x cell_size pixel block.
PgmImage render_matrix(const SymMatrix& m, int cell_size = 1);

/// Binary PGM (P5, maxval 255).
void write_pgm(const PgmImage& img, const std::filesystem::path& path);

}  // namespace covtrans::io

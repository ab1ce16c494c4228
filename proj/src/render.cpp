#include "covtrans/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace covtrans::io {

PgmImage render_matrix(const SymMatrix& m, int cell_size) {
    if (cell_size < 1) {
        throw std::invalid_argument("render_matrix: cell_size must be >= 1");
    }
    const int d = m.dim();
    double vmax = 0.0;
    for (const double v : m.data()) {
        vmax = std::max(vmax, std::abs(v));
    }

    PgmImage img;
    img.width = d * cell_size;
    img.height = d * cell_size;
    img.pixels.assign(static_cast<std::size_t>(img.width) * img.height, 255);
    if (vmax == 0.0) {
        return img;  // 0/0 guard: uniform white
    }
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const double level = 255.0 * (1.0 - std::abs(m(i, j)) / vmax);
            const auto pixel = static_cast<std::uint8_t>(std::lround(std::clamp(level, 0.0, 255.0)));
            for (int r = 0; r < cell_size; ++r) {
                for (int c = 0; c < cell_size; ++c) {
                    const std::size_t row = static_cast<std::size_t>(i) * cell_size + r;
                    const std::size_t col = static_cast<std::size_t>(j) * cell_size + c;
                    img.pixels[row * img.width + col] = pixel;
                }
            }
        }
    }
    return img;
}

void write_pgm(const PgmImage& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
}

}  // namespace covtrans::io

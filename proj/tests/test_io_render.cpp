#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "covtrans/graph_factory.hpp"
#include "covtrans/linalg.hpp"
#include "covtrans/matrix_io.hpp"
#include "covtrans/render.hpp"
#include "paper_fixtures.hpp"

using namespace covtrans;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("covtrans_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("csv round trip is bit exact", "[io]") {
    TempDir dir;
    const SymMatrix sigma = linalg::pd_inverse(build_precision(fixtures::chain_spec()));
    const auto file = dir.path / "sigma.csv";
    io::write_matrix_csv(sigma, file);
    const SymMatrix back = io::read_matrix_csv(file);
    REQUIRE(back == sigma);
}

TEST_CASE("json round trip is bit exact", "[io]") {
    TempDir dir;
    const SymMatrix sigma = star_inverse_closed_form(fixtures::star_spec());
    const auto file = dir.path / "sigma.json";
    io::write_matrix_json(sigma, file);
    REQUIRE(io::read_matrix_json(file) == sigma);
}

TEST_CASE("auto format detection", "[io]") {
    TempDir dir;
    const SymMatrix m = SymMatrix::identity(3);
    io::write_matrix_csv(m, dir.path / "m.csv");
    io::write_matrix_json(m, dir.path / "m.json");
    REQUIRE(io::read_matrix_auto(dir.path / "m.csv") == m);
    REQUIRE(io::read_matrix_auto(dir.path / "m.json") == m);
    REQUIRE_THROWS(io::read_matrix_auto(dir.path / "m.txt"));
    io::write_matrix_csv(m, dir.path / "m.txt");
    REQUIRE(io::read_matrix_auto(dir.path / "m.txt", std::string{"csv"}) == m);
}

TEST_CASE("malformed matrix files are rejected", "[io]") {
    TempDir dir;
    const auto asym = dir.path / "asym.csv";
    {
        std::ofstream out(asym);
        out << "1,2\n3,1\n";
    }
    REQUIRE_THROWS(io::read_matrix_csv(asym));

    const auto ragged = dir.path / "ragged.csv";
    {
        std::ofstream out(ragged);
        out << "1,0\n0\n";
    }
    REQUIRE_THROWS(io::read_matrix_csv(ragged));

    REQUIRE_THROWS(io::read_matrix_csv(dir.path / "missing.csv"));
}

TEST_CASE("series json round trip", "[io]") {
    TempDir dir;
    const auto f = make_builtin(Builtin::sin, 9);
    const auto file = dir.path / "sin.json";
    io::write_series_json(f, file);
    const auto back = io::read_series_json(file);
    REQUIRE(back.derivs() == f.derivs());
    REQUIRE(back.parity() == Parity::odd);
    REQUIRE(back.growth_bound() == f.growth_bound());
    REQUIRE(back.name() == "sin");
}

TEST_CASE("pgm rendering maps magnitude to darkness", "[render]") {
    SymMatrix m(2);
    m.set(0, 0, 2.0);
    m.set(1, 1, 1.0);
    m.set(0, 1, 0.0);
    const auto img = io::render_matrix(m);
    REQUIRE(img.width == 2);
    REQUIRE(img.height == 2);
    REQUIRE(img.pixels[0] == 0);      // largest magnitude is darkest
    REQUIRE(img.pixels[3] == 128);    // half magnitude
    REQUIRE(img.pixels[1] == 255);    // zero entry is white
}

TEST_CASE("zero matrix renders white", "[render]") {
    const auto img = io::render_matrix(SymMatrix(3));
    for (const auto p : img.pixels) {
        REQUIRE(p == 255);
    }
}

TEST_CASE("cell size replicates pixels", "[render]") {
    SymMatrix m(2);
    m.set(0, 0, 1.0);
    const auto img = io::render_matrix(m, 3);
    REQUIRE(img.width == 6);
    REQUIRE(img.height == 6);
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            REQUIRE(img.pixels[r * 6 + c] == 0);
        }
    }
    REQUIRE(img.pixels[5] == 255);
}

TEST_CASE("pgm file has the P5 header and payload", "[render]") {
    TempDir dir;
    const SymMatrix gamma = build_precision(fixtures::chain_spec());
    const auto img = io::render_matrix(gamma);
    const auto file = dir.path / "gamma.pgm";
    io::write_pgm(img, file);

    std::ifstream in(file, std::ios::binary);
    std::string magic;
    int w = 0, h = 0, maxval = 0;
    in >> magic >> w >> h >> maxval;
    REQUIRE(magic == "P5");
    REQUIRE(w == 8);
    REQUIRE(h == 8);
    REQUIRE(maxval == 255);
    in.get();  // single whitespace after maxval
    std::vector<char> payload(64);
    in.read(payload.data(), 64);
    REQUIRE(in.gcount() == 64);
    // diagonal is the largest magnitude -> black
    REQUIRE(static_cast<unsigned char>(payload[0]) == 0);
}

TEST_CASE("full precision formatting round trips", "[io]") {
    for (const double v : {1.0 / 3.0, -0.0457, 1e-17, 123456.789}) {
        REQUIRE(std::stod(io::format_full_precision(v)) == v);
    }
}

TEST_CASE("chain precision renders to golden bytes", "[render]") {
    // entries {1, 1/22, 0} map to {0, lround(255 * 21/22) = 243, 255}
    const auto img = io::render_matrix(build_precision(fixtures::chain_spec()));
    const std::vector<std::uint8_t> first_row = {0, 243, 255, 255, 255, 255, 255, 243};
    REQUIRE(std::vector<std::uint8_t>(img.pixels.begin(), img.pixels.begin() + 8) == first_row);
    for (int i = 0; i < 8; ++i) {
        REQUIRE(img.pixels[i * 8 + i] == 0);
    }
}

#include "covtrans/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace covtrans::io {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open file for reading: " + path.string());
    }
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    return out;
}

SymMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
    const int d = static_cast<int>(rows.size());
    if (d == 0) {
        throw std::runtime_error("matrix file is empty");
    }
    SymMatrix m(d);
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(rows[i].size()) != d) {
            throw std::runtime_error("matrix file is not square");
        }
    }
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            if (rows[i][j] != rows[j][i]) {
                throw std::runtime_error("matrix file is not symmetric");
            }
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

Parity parity_from_string(const std::string& s) {
    if (s == "odd") return Parity::odd;
    if (s == "even") return Parity::even;
    if (s == "general") return Parity::general;
    throw std::runtime_error("unknown parity '" + s + "'");
}

std::string parity_to_string(Parity p) {
    switch (p) {
        case Parity::odd: return "odd";
        case Parity::even: return "even";
        case Parity::general: return "general";
    }
    return "general";
}

}  // namespace

std::string format_full_precision(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_matrix_csv(const SymMatrix& m, const std::filesystem::path& path) {
    auto out = open_output(path);
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j > 0) {
                out << ',';
            }
            out << format_full_precision(m(i, j));
        }
        out << '\n';
    }
}

SymMatrix read_matrix_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            row.push_back(std::stod(cell));
        }
        rows.push_back(std::move(row));
    }
    return matrix_from_rows(rows);
}

void write_matrix_json(const SymMatrix& m, const std::filesystem::path& path) {
    nlohmann::json j;
    j["dim"] = m.dim();
    auto& entries = j["entries"] = nlohmann::json::array();
    for (int i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int jj = 0; jj < m.dim(); ++jj) {
            row.push_back(m(i, jj));
        }
        entries.push_back(std::move(row));
    }
    auto out = open_output(path);
    out << j.dump(2) << '\n';
}

SymMatrix read_matrix_json(const std::filesystem::path& path) {
    auto in = open_input(path);
    nlohmann::json j;
    in >> j;
    const int d = j.at("dim").get<int>();
    const auto& entries = j.at("entries");
    std::vector<std::vector<double>> rows;
    rows.reserve(d);
    for (const auto& row : entries) {
        rows.push_back(row.get<std::vector<double>>());
    }
    if (static_cast<int>(rows.size()) != d) {
        throw std::runtime_error("matrix json: dim does not match entries");
    }
    return matrix_from_rows(rows);
}

SymMatrix read_matrix_auto(const std::filesystem::path& path,
                           const std::optional<std::string>& forced_format) {
    std::string fmt;
    if (forced_format) {
        fmt = *forced_format;
    } else {
        const auto ext = path.extension().string();
        if (ext == ".csv") {
            fmt = "csv";
        } else if (ext == ".json") {
            fmt = "json";
        } else {
            throw std::runtime_error("cannot infer matrix format from '" + path.string() +
                                     "'; pass an explicit format");
        }
    }
    if (fmt == "csv") {
        return read_matrix_csv(path);
    }
    if (fmt == "json") {
        return read_matrix_json(path);
    }
    throw std::runtime_error("unknown matrix format '" + fmt + "'");
}

void write_series_json(const DerivativeSeries& f, const std::filesystem::path& path) {
    nlohmann::json j;
    if (!f.name().empty()) {
        j["name"] = f.name();
    }
    j["parity"] = parity_to_string(f.parity());
    j["derivs"] = f.derivs();
    if (f.growth_bound()) {
        j["growth_bound"] = *f.growth_bound();
    }
    auto out = open_output(path);
    out << j.dump(2) << '\n';
}

DerivativeSeries read_series_json(const std::filesystem::path& path) {
    auto in = open_input(path);
    nlohmann::json j;
    in >> j;
    std::vector<double> derivs = j.at("derivs").get<std::vector<double>>();
    const Parity parity = parity_from_string(j.at("parity").get<std::string>());
    std::optional<double> bound;
    if (j.contains("growth_bound")) {
        bound = j.at("growth_bound").get<double>();
    }
    std::string name = j.value("name", std::string{});
    return {std::move(derivs), parity, bound, std::move(name)};
}

}  // namespace covtrans::io

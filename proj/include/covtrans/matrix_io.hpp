#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "covtrans/derivative_series.hpp"
#include "covtrans/sym_matrix.hpp"

namespace covtrans::io {

/// CSV: d rows of d comma-separated decimals, 17 significant digits
/// (round-trips doubles exactly).
void write_matrix_csv(const SymMatrix& m, const std::filesystem::path& path);
SymMatrix read_matrix_csv(const std::filesystem::path& path);

/// JSON: {"dim": d, "entries": [[...], ...]}.
void write_matrix_json(const SymMatrix& m, const std::filesystem::path& path);
SymMatrix read_matrix_json(const std::filesystem::path& path);

/// Dispatches on the extension (.csv/.json) unless a format is forced;
/// anything else requires an explicit format.
SymMatrix read_matrix_auto(const std::filesystem::path& path,
                           const std::optional<std::string>& forced_format = std::nullopt);

/// JSON object {name?, parity, derivs: [...], growth_bound?}.
void write_series_json(const DerivativeSeries& f, const std::filesystem::path& path);
DerivativeSeries read_series_json(const std::filesystem::path& path);

/// Shortest-round-trip decimal text for one double (used by CSV and tables).
std::string format_full_precision(double v);

}  // namespace covtrans::io

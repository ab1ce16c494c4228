#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace covtrans::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitEngine = 3;
inline constexpr int kExitNearIdentity = 4;
inline constexpr int kExitVerification = 5;

/// Accepts exact rationals ("1/22") as well as plain decimals.
double parse_weight(const std::string& text);

struct GenerateArgs {
    std::string graph;        // chain | star | grid
    int dim = 0;              // node count (chain/star) or side length (grid)
    std::string weight;       // rational or decimal
    std::string out_dir = ".";
    std::vector<std::string> formats = {"csv", "json"};
};

struct TransformArgs {
    std::optional<std::string> input;  // matrix file; mutually exclusive with graph
    std::optional<std::string> input_format;
    std::string input_kind = "precision";  // precision | covariance
    std::string graph;
    int dim = 0;
    std::string weight;
    std::string function;
    double threshold = 0.01;
    std::string out_dir = ".";
    std::vector<std::string> formats = {"csv", "json"};
};

struct VerifyArgs {
    TransformArgs base;
    long long samples = 100000;
    std::uint64_t seed = 0;
    long long chunk = 4096;
    double tolerance_se = 4.0;
};

struct RenderArgs {
    std::string input;
    std::optional<std::string> input_format;
    int cell_size = 1;
    std::string out_dir = ".";
};

struct MomentArgs {
    int p = 0;
    int q = 0;
    double var_i = 1.0;
    double var_j = 1.0;
    double cov = 0.0;
    bool with_oracle = false;
};

struct ProbeArgs {
    std::string graph;
    int dim = 0;
    std::string weights;  // comma-separated list
    std::string function;
    std::string out_dir = ".";
};

int cmd_generate(const GenerateArgs& args);
int cmd_transform(const TransformArgs& args);
int cmd_verify(const VerifyArgs& args);
int cmd_render(const RenderArgs& args);
int cmd_moment(const MomentArgs& args);
int cmd_probe(const ProbeArgs& args);

}  // namespace covtrans::cli

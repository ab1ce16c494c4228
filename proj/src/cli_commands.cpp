#include "covtrans/cli_commands.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "covtrans/covariance_engine.hpp"
#include "covtrans/errors.hpp"
#include "covtrans/gaussian_moments.hpp"
#include "covtrans/graph_factory.hpp"
#include "covtrans/linalg.hpp"
#include "covtrans/matrix_io.hpp"
#include "covtrans/mc_oracle.hpp"
#include "covtrans/precision_engine.hpp"
#include "covtrans/render.hpp"

namespace covtrans::cli {

namespace {

namespace fs = std::filesystem;

bool use_color() {
    return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout)) != 0;
}

std::string verdict(bool ok) {
    if (!use_color()) {
        return ok ? "PASS" : "FAIL";
    }
    return ok ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
}

GraphKind graph_kind_from_string(const std::string& s) {
    if (s == "chain") return GraphKind::chain;
    if (s == "star") return GraphKind::star;
    if (s == "grid") return GraphKind::grid;
    throw std::invalid_argument("unknown graph kind '" + s + "' (expected chain|star|grid)");
}

DerivativeSeries resolve_function(const std::string& selector) {
    if (is_builtin_name(selector)) {
        return make_builtin_by_name(selector);
    }
    return io::read_series_json(selector);
}

void write_matrix_outputs(const SymMatrix& m, const fs::path& dir, const std::string& stem,
                          const std::vector<std::string>& formats) {
    for (const auto& fmt : formats) {
        if (fmt == "csv") {
            io::write_matrix_csv(m, dir / (stem + ".csv"));
        } else if (fmt == "json") {
            io::write_matrix_json(m, dir / (stem + ".json"));
        } else {
            throw std::invalid_argument("unknown output format '" + fmt + "'");
        }
    }
}

nlohmann::json matrix_json(const SymMatrix& m) {
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
    return j;
}

nlohmann::json report_json(const TransformReport& report) {
    nlohmann::json j;
    j["dim"] = report.sigma_pi.dim();
    j["constants"] = {{"kappa", report.constants.kappa},
                      {"lambda", report.constants.lambda},
                      {"inv_kappa", report.constants.inv_kappa},
                      {"lambda_over_kappa_sq", report.constants.lambda_over_kappa_sq}};
    j["delta"] = report.delta;
    j["epsilon"] = report.epsilon;
    j["matrices"] = {{"sigma_rho", matrix_json(report.sigma_rho)},
                     {"sigma_pi", matrix_json(report.sigma_pi)},
                     {"predicted_sigma", matrix_json(report.predicted_sigma)},
                     {"gamma_pi", matrix_json(report.gamma_pi)},
                     {"predicted_gamma", matrix_json(report.predicted_gamma)},
                     {"e_prime", matrix_json(report.e_prime)}};
    j["errors"] = {{"e_prime_opnorm", report.e_prime_opnorm},
                   {"e_prime_diag_opnorm", report.e_prime_diag_opnorm},
                   {"e_prime_offdiag_opnorm", report.e_prime_offdiag_opnorm},
                   {"e_prime_offdiag_hsnorm", report.e_prime_offdiag_hsnorm},
                   {"e_double_prime_opnorm", operator_norm(report.e_double_prime)}};
    j["threshold"] = report.threshold;
    auto& cls = j["classification"] = nlohmann::json::array();
    for (const auto& entry : report.classification) {
        cls.push_back({{"i", entry.i},
                       {"j", entry.j},
                       {"value", entry.value},
                       {"class", entry.structural_edge ? "structural-edge" : "near-zero"}});
    }
    return j;
}

void write_json_file(const nlohmann::json& j, const fs::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open file for writing: " + path.string());
    }
    out << j.dump(2) << '\n';
}

void write_meta_sidecar(const fs::path& path, const std::string& command,
                        const nlohmann::json& invocation) {
    nlohmann::json meta;
    meta["command"] = command;
    meta["invocation"] = invocation;
    std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    meta["generated_at"] = stamp;
    write_json_file(meta, path);
}

/// Resolves the input covariance/precision pair from either a matrix file or
/// inline generator flags (exactly one source).
std::pair<SymMatrix, SymMatrix> load_gamma_sigma(const TransformArgs& args) {
    const bool has_file = args.input.has_value();
    const bool has_graph = !args.graph.empty();
    if (has_file == has_graph) {
        throw std::invalid_argument("exactly one input source required: --input or --graph");
    }
    SymMatrix input;
    if (has_file) {
        input = io::read_matrix_auto(*args.input, args.input_format);
    } else {
        if (args.dim <= 0 || args.weight.empty()) {
            throw std::invalid_argument("--graph requires --dim and --weight");
        }
        input = build_precision(
            {graph_kind_from_string(args.graph), args.dim, parse_weight(args.weight)});
    }
    if (args.input_kind == "precision") {
        return {input, linalg::pd_inverse(input)};
    }
    if (args.input_kind == "covariance") {
        return {linalg::pd_inverse(input), input};
    }
    throw std::invalid_argument("--input-kind must be precision or covariance");
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << '\n';
    return kExitUsage;
}

}  // namespace

double parse_weight(const std::string& text) {
    const auto slash = text.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
        const double value = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument("invalid weight '" + text + "'");
        }
        return value;
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    const double p = std::stod(num, &used);
    if (used != num.size()) {
        throw std::invalid_argument("invalid weight '" + text + "'");
    }
    const double q = std::stod(den, &used);
    if (used != den.size() || q == 0.0) {
        throw std::invalid_argument("invalid weight '" + text + "'");
    }
    return p / q;
}

int cmd_generate(const GenerateArgs& args) {
    try {
        if (args.weight.empty()) {
            return usage_error("--weight is required");
        }
        const GraphKind kind = graph_kind_from_string(args.graph);
        const GraphSpec spec{kind, args.dim, parse_weight(args.weight)};
        const fs::path dir(args.out_dir);
        fs::create_directories(dir);

        const SymMatrix gamma = build_precision(spec);
        write_matrix_outputs(gamma, dir, "gamma_rho", args.formats);
        if (kind == GraphKind::star) {
            write_matrix_outputs(star_inverse_closed_form(spec), dir, "sigma_rho", args.formats);
        } else if (kind == GraphKind::grid && spec.dim_param == 3 && spec.weight > 0.0) {
            write_matrix_outputs(grid_covariance_closed_form(spec), dir, "sigma_rho",
                                 args.formats);
        }
        std::cout << "wrote gamma_rho (" << gamma.dim() << "x" << gamma.dim() << ") to "
                  << dir.string() << '\n';
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const EngineError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEngine;
    }
}

int cmd_transform(const TransformArgs& args) {
    try {
        if (args.function.empty()) {
            return usage_error("--function is required");
        }
        const DerivativeSeries f = resolve_function(args.function);
        const auto [gamma, sigma] = load_gamma_sigma(args);
        const NearIdentityPrecision prec = analyze_near_identity(gamma);
        const TransformReport report = predict_and_compare(prec, f, args.threshold);

        const ConvergenceReport conv = convergence_check(f, report.sigma_rho);
        if (!conv.ok) {
            std::cerr << "warning: no derivative growth bound declared; the series convergence"
                         " hypothesis is unverified (max std dev "
                      << conv.bound_M << ")\n";
        }

        const fs::path dir(args.out_dir);
        fs::create_directories(dir);
        write_matrix_outputs(prec.gamma, dir, "gamma_rho", args.formats);
        write_matrix_outputs(report.sigma_rho, dir, "sigma_rho", args.formats);
        write_matrix_outputs(report.sigma_pi, dir, "sigma_pi", args.formats);
        write_matrix_outputs(report.predicted_sigma, dir, "predicted_sigma", args.formats);
        write_matrix_outputs(report.gamma_pi, dir, "gamma_pi", args.formats);
        write_matrix_outputs(report.predicted_gamma, dir, "predicted_gamma", args.formats);

        nlohmann::json constants = {{"kappa", report.constants.kappa},
                                    {"lambda", report.constants.lambda},
                                    {"inv_kappa", report.constants.inv_kappa},
                                    {"lambda_over_kappa_sq", report.constants.lambda_over_kappa_sq},
                                    {"delta", report.delta},
                                    {"epsilon", report.epsilon}};
        write_json_file(constants, dir / "constants.json");
        write_json_file(report_json(report), dir / "report.json");
        write_meta_sidecar(dir / "report_meta.json", "transform",
                           {{"function", args.function},
                            {"threshold", args.threshold},
                            {"input_kind", args.input_kind}});

        int edges = 0;
        double max_near_zero = 0.0;
        for (const auto& entry : report.classification) {
            if (entry.structural_edge) {
                ++edges;
            } else {
                max_near_zero = std::max(max_near_zero, std::abs(entry.value));
            }
        }
        std::cout << "kappa      = " << report.constants.kappa << '\n'
                  << "lambda     = " << report.constants.lambda << '\n'
                  << "1/kappa    = " << report.constants.inv_kappa << '\n'
                  << "lam/kappa^2= " << report.constants.lambda_over_kappa_sq << '\n'
                  << "delta      = " << report.delta << '\n'
                  << "epsilon    = " << report.epsilon << '\n'
                  << "|E'|       = " << report.e_prime_opnorm << '\n'
                  << "sparsity   : " << edges << " structural edges at threshold "
                  << report.threshold << ", max near-zero magnitude " << max_near_zero << " ["
                  << verdict(max_near_zero <= report.threshold) << "]\n";
        return kExitOk;
    } catch (const NearIdentityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNearIdentity;
    } catch (const OddParityError& e) {
        std::cerr << "error: " << e.what()
                  << " (the closed-form transform requires an odd function)\n";
        return kExitNearIdentity;
    } catch (const EngineError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEngine;
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEngine;
    }
}

int cmd_verify(const VerifyArgs& args) {
    try {
        if (args.base.function.empty()) {
            return usage_error("--function is required");
        }
        if (args.samples < 2) {
            return usage_error("--samples must be >= 2");
        }
        const DerivativeSeries f = resolve_function(args.base.function);
        const auto [gamma, sigma] = load_gamma_sigma(args.base);
        const SymMatrix analytic = transform_covariance({sigma, f});

        const PointEvaluator evaluator(f);
        if (evaluator.uses_series_evaluation()) {
            std::cerr << "warning: sampling a user-supplied series through its truncated Taylor"
                         " sum; tail mass beyond the series radius is unvalidated\n";
        }
        const SampleConfig cfg{args.samples, args.seed, args.chunk};
        const SymMatrix empirical = sample_transformed_covariance(sigma, evaluator, cfg);
        const EmpiricalComparison cmp = compare(empirical, analytic, args.samples,
                                                args.tolerance_se);

        const fs::path dir(args.base.out_dir);
        fs::create_directories(dir);
        nlohmann::json j;
        j["empirical"] = matrix_json(cmp.empirical);
        j["analytic"] = matrix_json(cmp.analytic);
        j["standard_errors"] = matrix_json(cmp.standard_errors);
        j["max_abs_dev"] = cmp.max_abs_dev;
        j["se_multiplier"] = cmp.se_multiplier;
        j["samples"] = args.samples;
        j["seed"] = args.seed;
        j["chunk"] = args.chunk;
        auto& flags = j["flagged"] = nlohmann::json::array();
        for (const auto& flag : cmp.flagged) {
            flags.push_back({{"i", flag.i},
                             {"j", flag.j},
                             {"deviation", flag.deviation},
                             {"standard_error", flag.standard_error}});
        }
        write_json_file(j, dir / "verify_report.json");

        const bool ok = cmp.flagged.empty();
        std::cout << "max |empirical - analytic| = " << cmp.max_abs_dev << " over "
                  << args.samples << " samples; " << cmp.flagged.size() << " entries beyond "
                  << args.tolerance_se << " SE [" << verdict(ok) << "]\n";
        return ok ? kExitOk : kExitVerification;
    } catch (const NearIdentityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNearIdentity;
    } catch (const OddParityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNearIdentity;
    } catch (const EngineError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEngine;
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEngine;
    }
}

int cmd_render(const RenderArgs& args) {
    try {
        const fs::path input(args.input);
        const SymMatrix m = io::read_matrix_auto(input, args.input_format);
        const io::PgmImage img = io::render_matrix(m, args.cell_size);
        const fs::path dir(args.out_dir);
        fs::create_directories(dir);
        const fs::path out = dir / (input.stem().string() + ".pgm");
        io::write_pgm(img, out);
        std::cout << "wrote " << out.string() << " (" << img.width << "x" << img.height << ")\n";
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEngine;
    }
}

int cmd_moment(const MomentArgs& args) {
    try {
        const BivariateMomentQuery query{args.p, args.q, args.var_i, args.var_j, args.cov};
        nlohmann::json j;
        j["p"] = args.p;
        j["q"] = args.q;
        j["var_i"] = args.var_i;
        j["var_j"] = args.var_j;
        j["cov"] = args.cov;
        j["value"] = isserlis_bivariate(query);
        if (args.with_oracle) {
            j["oracle"] = isserlis_oracle(query);
        }
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
}

int cmd_probe(const ProbeArgs& args) {
    try {
        if (args.function.empty()) {
            return usage_error("--function is required");
        }
        const DerivativeSeries f = resolve_function(args.function);
        std::vector<double> weights;
        std::stringstream ss(args.weights);
        std::string token;
        while (std::getline(ss, token, ',')) {
            weights.push_back(parse_weight(token));
        }
        if (weights.empty()) {
            return usage_error("--weights requires at least one value");
        }
        const GraphSpec spec{graph_kind_from_string(args.graph), args.dim, 0.0};
        const auto rows = error_scaling_probe(f, spec, weights);

        std::cout << "weight        delta         epsilon       |E'|          |E'|/eps^2\n";
        nlohmann::json table = nlohmann::json::array();
        for (const auto& row : rows) {
            char line[128];
            std::snprintf(line, sizeof(line), "%-13.6g %-13.6g %-13.6g %-13.6g %-13.6g",
                          row.weight, row.delta, row.epsilon, row.e_prime_norm, row.ratio);
            std::cout << line << '\n';
            table.push_back({{"weight", row.weight},
                             {"delta", row.delta},
                             {"epsilon", row.epsilon},
                             {"e_prime_norm", row.e_prime_norm},
                             {"ratio", row.ratio}});
        }
        const fs::path dir(args.out_dir);
        fs::create_directories(dir);
        write_json_file(table, dir / "probe.json");
        return kExitOk;
    } catch (const OddParityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNearIdentity;
    } catch (const EngineError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEngine;
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
}

}  // namespace covtrans::cli

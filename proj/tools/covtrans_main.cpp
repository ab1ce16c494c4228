#include <CLI11.hpp>

#include "covtrans/cli_commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"covtrans: structure-preserving covariance and precision transforms"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_dir = ".";
    std::vector<std::string> formats = {"csv", "json"};
    double threshold = 0.01;
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_option("--format", formats, "output formats (csv, json)")->delimiter(',');
    app.add_option("--threshold", threshold, "sparsity classification threshold")
        ->capture_default_str();

    covtrans::cli::GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "emit a chain/star/grid precision matrix");
    generate->add_option("--graph", gen.graph, "graph family: chain|star|grid")->required();
    generate->add_option("--dim,--side", gen.dim, "node count (chain/star) or side length (grid)")
        ->required();
    generate->add_option("--weight", gen.weight, "edge weight, decimal or p/q");

    covtrans::cli::TransformArgs tr;
    auto* transform =
        app.add_subcommand("transform", "transform a covariance through a diagonal map and "
                                        "compare against the structural prediction");
    transform->add_option("--input", tr.input, "matrix file (.csv or .json)");
    transform->add_option("--input-format", tr.input_format, "force csv or json");
    transform->add_option("--input-kind", tr.input_kind, "precision|covariance")
        ->capture_default_str();
    transform->add_option("--graph", tr.graph, "generate the input instead: chain|star|grid");
    transform->add_option("--dim,--side", tr.dim, "generator dimension");
    transform->add_option("--weight", tr.weight, "generator edge weight");
    transform->add_option("--function", tr.function,
                          "builtin name (sin|sinh|cube|identity|odd_monomial(L)) or series file");

    covtrans::cli::VerifyArgs ver;
    auto* verify =
        app.add_subcommand("verify", "Monte Carlo check of the analytic transformed covariance");
    verify->add_option("--input", ver.base.input, "matrix file (.csv or .json)");
    verify->add_option("--input-format", ver.base.input_format, "force csv or json");
    verify->add_option("--input-kind", ver.base.input_kind, "precision|covariance")
        ->capture_default_str();
    verify->add_option("--graph", ver.base.graph, "generate the input instead");
    verify->add_option("--dim,--side", ver.base.dim, "generator dimension");
    verify->add_option("--weight", ver.base.weight, "generator edge weight");
    verify->add_option("--function", ver.base.function, "builtin name or series file");
    verify->add_option("--samples", ver.samples, "sample count")->capture_default_str();
    verify->add_option("--seed", ver.seed, "RNG seed")->capture_default_str();
    verify->add_option("--chunk", ver.chunk, "samples per accumulation block")
        ->capture_default_str();
    verify->add_option("--tolerance-se", ver.tolerance_se,
                       "flag entries beyond this many standard errors")
        ->capture_default_str();

    covtrans::cli::RenderArgs ren;
    auto* render = app.add_subcommand("render", "export a matrix as a grayscale PGM");
    render->add_option("--input", ren.input, "matrix file")->required();
    render->add_option("--input-format", ren.input_format, "force csv or json");
    render->add_option("--cell-size", ren.cell_size, "pixels per matrix cell")
        ->capture_default_str();

    covtrans::cli::MomentArgs mom;
    auto* moment = app.add_subcommand("moment", "closed-form bivariate Gaussian product moment");
    moment->add_option("--p", mom.p, "power of X_i")->required();
    moment->add_option("--q", mom.q, "power of X_j")->required();
    moment->add_option("--var-i", mom.var_i, "variance of X_i")->capture_default_str();
    moment->add_option("--var-j", mom.var_j, "variance of X_j")->capture_default_str();
    moment->add_option("--cov", mom.cov, "covariance")->capture_default_str();
    moment->add_flag("--oracle", mom.with_oracle, "also run the pair-partition enumeration");

    covtrans::cli::ProbeArgs pro;
    auto* probe = app.add_subcommand("probe", "tabulate prediction error against epsilon over a "
                                              "sweep of edge weights");
    probe->add_option("--graph", pro.graph, "graph family")->required();
    probe->add_option("--dim,--side", pro.dim, "generator dimension")->required();
    probe->add_option("--weights", pro.weights, "comma-separated edge weights")->required();
    probe->add_option("--function", pro.function, "builtin name or series file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help / --version
        }
        app.exit(e);
        return covtrans::cli::kExitUsage;
    }

    gen.out_dir = tr.out_dir = ver.base.out_dir = ren.out_dir = pro.out_dir = out_dir;
    gen.formats = tr.formats = ver.base.formats = formats;
    tr.threshold = threshold;

    if (generate->parsed()) return covtrans::cli::cmd_generate(gen);
    if (transform->parsed()) return covtrans::cli::cmd_transform(tr);
    if (verify->parsed()) return covtrans::cli::cmd_verify(ver);
    if (render->parsed()) return covtrans::cli::cmd_render(ren);
    if (moment->parsed()) return covtrans::cli::cmd_moment(mom);
    if (probe->parsed()) return covtrans::cli::cmd_probe(pro);
    return covtrans::cli::kExitUsage;
}

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "suzuki/cli.hpp"

int main(int argc, char** argv) {
    using suzuki::cli::Command;
    using suzuki::cli::Format;

    CLI::App app{"Exact Cartier-operator computations on the Suzuki curves S_m"};
    app.fallthrough();

    suzuki::cli::RunConfig cfg;
    app.add_option("--m", cfg.m, "curve index m (q = 2^{2m+1}, q0 = 2^m)")
        ->required()
        ->check(CLI::Range(1, 20));
    const std::map<std::string, Format> formats{
        {"pretty", Format::pretty}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("pretty");
    std::string cache_dir;
    auto* cache_opt = app.add_option(
        "--cache-dir", cache_dir,
        "directory for the SZCM matrix cache (SUZUKI_CARTIER_CACHE_DIR as fallback)");
    app.add_option("--jobs", cfg.jobs, "worker threads for matrix columns")
        ->check(CLI::Range(1, 256));
    app.add_flag("--allow-large", cfg.allow_large,
                 "lift the default m <= 4 bound on matrix commands");
    app.add_flag("--verify-oracle", cfg.verify_oracle,
                 "force the oracle cross-check in `verify` for m > 2 (expensive)");

    const std::map<std::string, Command> commands{
        {"params", Command::params},
        {"a-number", Command::a_number},
        {"basis", Command::basis},
        {"matrix", Command::matrix},
        {"rank-profile", Command::rank_profile},
        {"eo-constraints", Command::eo_constraints},
        {"eo-enumerate", Command::eo_enumerate},
        {"points", Command::points},
        {"verify", Command::verify},
        {"all", Command::all},
    };
    app.add_subcommand("params", "derived constants of S_m");
    app.add_subcommand("a-number", "a-number (closed formula, cross-checked against the matrix)");
    app.add_subcommand("basis", "basis monomials of the regular 1-forms");
    auto* sc_matrix = app.add_subcommand("matrix", "Cartier matrix over GF(2)");
    std::string matrix_out;
    auto* out_opt = sc_matrix->add_option("--out", matrix_out, "write the matrix in SZCM format");
    app.add_subcommand("rank-profile", "ranks of the iterated Cartier matrix");
    app.add_subcommand("eo-constraints", "fixed Ekedahl-Oort final-type values");
    auto* sc_enum = app.add_subcommand("eo-enumerate", "final types compatible with the constraints");
    sc_enum->add_option("--cap", cfg.cap, "maximum number of sequences to enumerate");
    auto* sc_points = app.add_subcommand("points", "point counts over GF(q^k)");
    sc_points->add_option("--k", cfg.k_values, "extension degrees k (repeatable)");
    sc_points->add_flag("--naive", cfg.naive_check,
                        "cross-check against the brute-force count (k in {1,2,4}, q^k <= 2^24)");
    app.add_subcommand("verify", "run all consistency checks (exit 1 on mismatch)");
    app.add_subcommand("all", "every report plus the verify checks");
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*cache_opt) cfg.cache_dir = cache_dir;
    if (*out_opt) cfg.matrix_out = matrix_out;
    for (const auto& [name, cmd] : commands) {
        if (app.got_subcommand(name)) cfg.command = cmd;
    }
    return suzuki::cli::run(cfg, std::cout, std::cerr);
}

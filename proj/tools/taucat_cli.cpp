// Command-line driver: tau-tilting combinatorics over monomial bound-quiver
// algebras. See README.md for the file formats and examples.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "taucat/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"two-term silting and tau-cluster morphism categories"};
    app.require_subcommand(1);
    app.fallthrough(true);  // global flags may follow the subcommand

    taucat::RunConfig cfg;
    app.add_option("--algebra", cfg.algebra_path, "algebra definition file (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--out", cfg.out_path, "output path (default: stdout)");
    app.add_option("--format", cfg.format, "output format: json|dot|table")
        ->check(CLI::IsMember({"json", "dot", "table"}));
    app.add_option("--max-ind", cfg.max_indecomposables, "indecomposable enumeration cap");
    app.add_option("--max-mut", cfg.max_mutations, "mutation closure cap");
    app.add_option("--jobs", cfg.jobs, "worker threads for verification rows");
    app.add_option("--cache", cfg.cache_dir, "cache directory for memoized results");

    app.add_subcommand("tautilt", "support tau-tilting exchange graph with g-vector labels");
    app.add_subcommand("tcmc", "tau-cluster morphism category, both constructions");
    auto* seq = app.add_subcommand("sequences", "presilting / signed tau-exceptional sequences");
    seq->add_option("--length", cfg.sequence_length, "sequence length t")->required();
    app.add_subcommand("verify", "run every verification suite and report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : taucat::exit_input_error;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.sequence_length_set = seq->parsed();

    taucat::RunResult result = taucat::run_command(cfg);
    if (!result.diagnostics.empty()) std::cerr << "error: " << result.diagnostics << "\n";
    if (!result.output.empty()) {
        if (cfg.out_path.empty()) {
            std::cout << result.output;
        } else {
            std::ofstream out(cfg.out_path);
            if (!out) {
                std::cerr << "error: cannot write " << cfg.out_path << "\n";
                return taucat::exit_input_error;
            }
            out << result.output;
        }
    }
    return result.code;
}

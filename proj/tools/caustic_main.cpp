// caustic: solver and justification engine for labelled disjunctive
// logic programs with algebraic causal explanations.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "caustic/solve.hpp"

int main(int argc, char** argv) {
    CLI::App app{"causal stable model solver"};
    app.require_subcommand(1);

    std::string path;
    std::string mode = "causal";
    std::string format = "text";
    caustic::SolveConfig config;

    CLI::App* solve = app.add_subcommand("solve", "solve a program file");
    solve->add_option("file", path, "program file")->required();
    solve->add_option("--mode", mode, "standard|causal")
        ->check(CLI::IsMember({"standard", "causal"}));
    solve->add_option("--format", format, "text|json|dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    solve->add_option("--explain", config.explain_atoms, "atom to explain (repeatable)");
    solve->add_flag("--all", config.all_atoms, "explain every true atom");
    solve->add_flag("--omit-normal-heads", config.omit_normal_heads,
                    "suppress head-atom suffixes of normal rules in rendered values");
    solve->add_flag("--strip-atom-edges", config.strip_atoms,
                    "drop edges touching atom labels from displayed graphs");
    solve->add_option("--max-atoms", config.limits.max_atoms, "subset enumeration bound")
        ->check(CLI::PositiveNumber)
        ->envname("CAUSTIC_MAX_ATOMS");
    solve->add_option("--max-selections", config.limits.max_selections,
                      "disjunct selection bound")
        ->check(CLI::PositiveNumber);
    solve->add_option("--max-choices", config.limits.max_choices, "choice rule bound")
        ->check(CLI::PositiveNumber);
    solve->add_option("--jobs", config.limits.jobs, "worker threads")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    config.mode = mode == "standard" ? caustic::SolveConfig::Mode::Standard
                                     : caustic::SolveConfig::Mode::Causal;
    config.format = format == "json"  ? caustic::SolveConfig::Format::Json
                    : format == "dot" ? caustic::SolveConfig::Format::Dot
                                      : caustic::SolveConfig::Format::Text;

    caustic::SolveOutput result = caustic::run_solve(path, config);
    std::fputs(result.out.c_str(), stdout);
    std::fputs(result.err.c_str(), stderr);
    return result.exit_code;
}

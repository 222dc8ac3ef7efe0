#ifndef CAUSTIC_SOLVE_HPP
#define CAUSTIC_SOLVE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "caustic/engine.hpp"
#include "caustic/syntax.hpp"

namespace caustic {

struct SolveConfig {
    enum class Mode { Standard, Causal };
    enum class Format { Text, Json, Dot };

    Mode mode = Mode::Causal;
    Format format = Format::Text;
    std::vector<std::string> explain_atoms;
    bool all_atoms = false;
    bool omit_normal_heads = false;
    bool strip_atoms = false;
    EngineLimits limits;
};

/// Exit conventions: 0 with at least one model, 1 with none, 2 on usage,
/// parse or bound errors.
struct SolveOutput {
    int exit_code = 0;
    std::string out;  // stdout payload
    std::string err;  // diagnostics
};

class AtomFalse : public std::runtime_error {
public:
    explicit AtomFalse(const std::string& atom)
        : std::runtime_error("no justification for '" + atom + "': atom has value 0") {}
};

/// One DOT digraph per justification graph of the atom, reduced for
/// display, named `<atom>_j<n>`.
std::string export_dot(const Interpretation& model, const std::string& atom,
                       const RenderOptions& opts);

/// Machine format: graphs as full closed edge lists, reflexive edges
/// included; stable key order.
std::string export_json(const std::vector<Interpretation>& models, const Program& p,
                        const SolveConfig& config);

SolveOutput run_solve(const std::string& path, const SolveConfig& config);

/// Same pipeline on in-memory text; run_solve delegates here.
SolveOutput solve_text(const std::string& text, const SolveConfig& config);

}  // namespace caustic

#endif

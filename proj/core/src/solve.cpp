#include "caustic/solve.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "caustic/render.hpp"
#include "json.hpp"

namespace caustic {

namespace {

std::string join_atoms(const std::set<std::string>& atoms) {
    std::string out;
    for (const std::string& a : atoms) {
        if (!out.empty()) out += ' ';
        out += a;
    }
    return out;
}

std::string dot_digraph(const CausalGraph& g, const std::string& name,
                        const RenderOptions& opts) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    CausalGraph shown = display_graph(g, opts);
    Reduction red = transitive_reflexive_reduction(shown);
    if (!red.unique)
        os << "  // graph has a non-reflexive cycle; full closure shown\n";
    std::set<std::string> nodes;
    for (const auto& [a, b] : red.edges) {
        nodes.insert(a.name);
        nodes.insert(b.name);
    }
    for (const std::string& n : nodes) os << "  " << n << ";\n";
    for (const auto& [a, b] : red.edges)
        if (a != b) os << "  " << a.name << " -> " << b.name << ";\n";
    os << "}\n";
    return os.str();
}

std::vector<std::string> atoms_to_show(const Interpretation& model, const Program& p,
                                       const SolveConfig& config) {
    if (!config.explain_atoms.empty()) {
        std::vector<std::string> out = config.explain_atoms;
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    auto t = model.true_atoms();
    return {t.begin(), t.end()};
}

}  // namespace

std::string export_dot(const Interpretation& model, const std::string& atom,
                       const RenderOptions& opts) {
    const CausalValue& v = model.at(atom);
    if (v.is_zero()) throw AtomFalse(atom);
    std::string out;
    int n = 0;
    for (const CausalGraph& g : v.graphs())
        out += dot_digraph(g, atom + "_j" + std::to_string(++n), opts);
    return out;
}

std::string export_json(const std::vector<Interpretation>& models, const Program& p,
                        const SolveConfig& config) {
    const RenderOptions opts =
        render_options_for(p, config.omit_normal_heads, config.strip_atoms);
    nlohmann::ordered_json doc;
    doc["mode"] = config.mode == SolveConfig::Mode::Standard ? "standard" : "causal";
    doc["models"] = nlohmann::ordered_json::array();
    for (const Interpretation& model : models) {
        nlohmann::ordered_json entry;
        entry["atoms"] = model.true_atoms();
        nlohmann::ordered_json values = nlohmann::ordered_json::object();
        for (const std::string& atom : atoms_to_show(model, p, config)) {
            const CausalValue& v = model.at(atom);
            nlohmann::ordered_json cell;
            cell["term"] = format_value(v, opts);
            nlohmann::ordered_json graphs = nlohmann::ordered_json::array();
            for (const CausalGraph& g : v.graphs()) {
                nlohmann::ordered_json edges = nlohmann::ordered_json::array();
                for (const auto& [a, b] : g.closed_edges())
                    edges.push_back(nlohmann::ordered_json::array({a.name, b.name}));
                graphs.push_back(std::move(edges));
            }
            cell["graphs"] = std::move(graphs);
            values[atom] = std::move(cell);
        }
        entry["values"] = std::move(values);
        doc["models"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

SolveOutput solve_text(const std::string& text, const SolveConfig& config) {
    SolveOutput result;

    ParseResult parsed = parse_program(text);
    if (!parsed.ok()) {
        for (const Diagnostic& d : parsed.errors) {
            std::ostringstream os;
            os << d.line << ":" << d.col << ": " << d.code << ": " << d.message << "\n";
            result.err += os.str();
        }
        result.exit_code = 2;
        return result;
    }
    const Program& program = *parsed.program;

    for (const std::string& atom : config.explain_atoms)
        if (!program.atoms.count(atom)) {
            result.err = "unknown atom '" + atom + "'\n";
            result.exit_code = 2;
            return result;
        }
    if (config.format == SolveConfig::Format::Dot && config.explain_atoms.empty() &&
        !config.all_atoms) {
        result.err = "dot output needs --explain ATOM or --all\n";
        result.exit_code = 2;
        return result;
    }

    const bool has_choices = std::any_of(
        program.rules.begin(), program.rules.end(),
        [](const Rule& r) { return r.kind == RuleKind::CausalChoice; });

    try {
        if (config.mode == SolveConfig::Mode::Standard) {
            Program flat = program;
            // Standard semantics of a choice program: rewrite each
            // causal-choice rule into its standard-choice family.
            while (true) {
                auto it = std::find_if(
                    flat.rules.begin(), flat.rules.end(),
                    [](const Rule& r) { return r.kind == RuleKind::CausalChoice; });
                if (it == flat.rules.end()) break;
                flat = rchoice_transform(flat, *it);
            }
            auto models = standard_stable_models(flat, config.limits);
            std::sort(models.begin(), models.end(),
                      [](const auto& a, const auto& b) {
                          if (a.size() != b.size()) return a.size() < b.size();
                          return a < b;
                      });
            if (config.format == SolveConfig::Format::Json) {
                std::vector<Interpretation> as_interps;
                for (const auto& s : models) {
                    Interpretation i;
                    for (const std::string& a : s) i.set(a, CausalValue::one());
                    as_interps.push_back(std::move(i));
                }
                result.out = export_json(as_interps, program, config);
            } else {
                for (const auto& s : models) result.out += join_atoms(s) + "\n";
            }
            result.exit_code = models.empty() ? 1 : 0;
            return result;
        }

        auto models = has_choices ? causal_stable_models_choice(program, config.limits)
                                  : causal_stable_models(program, config.limits);
        const RenderOptions opts =
            render_options_for(program, config.omit_normal_heads, config.strip_atoms);

        switch (config.format) {
            case SolveConfig::Format::Text: {
                int n = 0;
                for (const Interpretation& model : models) {
                    if (n) result.out += "\n";
                    result.out += "% model " + std::to_string(++n) + ": " +
                                  join_atoms(model.true_atoms()) + "\n";
                    for (const std::string& atom : atoms_to_show(model, program, config))
                        result.out += atom + " = " + format_value(model.at(atom), opts) + "\n";
                }
                break;
            }
            case SolveConfig::Format::Json:
                result.out = export_json(models, program, config);
                break;
            case SolveConfig::Format::Dot: {
                int n = 0;
                for (const Interpretation& model : models) {
                    result.out += "// model " + std::to_string(++n) + "\n";
                    std::vector<std::string> atoms = config.explain_atoms;
                    if (atoms.empty()) {
                        auto t = model.true_atoms();
                        atoms.assign(t.begin(), t.end());
                    }
                    std::sort(atoms.begin(), atoms.end());
                    for (const std::string& atom : atoms)
                        result.out += export_dot(model, atom, opts);
                }
                break;
            }
        }
        result.exit_code = models.empty() ? 1 : 0;
    } catch (const TooLargeError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
    } catch (const AtomFalse& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
    }
    return result;
}

SolveOutput run_solve(const std::string& path, const SolveConfig& config) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        SolveOutput result;
        result.err = "cannot open '" + path + "'\n";
        result.exit_code = 2;
        return result;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return solve_text(buffer.str(), config);
}

}  // namespace caustic

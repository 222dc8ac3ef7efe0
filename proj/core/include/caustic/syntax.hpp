#ifndef CAUSTIC_SYNTAX_HPP
#define CAUSTIC_SYNTAX_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "caustic/algebra.hpp"
#include "caustic/render.hpp"

namespace caustic {

enum class RuleKind { Regular, CausalChoice };

/// A labelled disjunctive rule. Facts written bare carry their head atom
/// as label (the fact convention); unlabelled constraints get a
/// synthesized `__c<n>` label that never shows up in justifications.
struct Rule {
    std::string label;
    bool fact_label = false;       // label names the head atom, not a rule
    bool synthetic_label = false;  // label was synthesized by the parser
    std::vector<std::string> pos_head;
    std::vector<std::string> neg_head;
    std::vector<std::string> pos_body;
    std::vector<std::string> neg_body;
    RuleKind kind = RuleKind::Regular;

    bool is_constraint() const { return pos_head.empty() && neg_head.empty(); }
    bool is_fact() const {
        return kind == RuleKind::Regular && pos_head.size() == 1 && neg_head.empty() &&
               pos_body.empty() && neg_body.empty();
    }
    /// Single positive head, no negative head.
    bool is_normal() const { return pos_head.size() == 1 && neg_head.empty(); }

    /// The label as an algebra vertex.
    Label vertex_label() const {
        return {label, fact_label ? LabelKind::Atom : LabelKind::Rule};
    }

    bool operator==(const Rule&) const = default;
};

struct Program {
    std::vector<Rule> rules;
    std::set<std::string> atoms;

    /// Rule-only labels (facts excluded: their label is the atom).
    std::set<std::string> rule_labels() const;

    bool operator==(const Program&) const = default;
};

struct Diagnostic {
    int line = 0;
    int col = 0;
    std::string code;  // SyntaxError, DuplicateLabel, LabelAtomClash, ...
    std::string message;
};

struct ParseResult {
    std::optional<Program> program;
    std::vector<Diagnostic> errors;

    bool ok() const { return program.has_value() && errors.empty(); }
};

/// Parses the surface syntax: `:-` arrow, `<~` choice arrow, `v` head
/// disjunction, `not` negation, `,` conjunction, `.` terminator, `%`
/// comments. Runs validate_program on the result.
ParseResult parse_program(std::string_view text);

/// Label uniqueness, label/atom namespace consistency, non-empty heads
/// for choice rules.
std::vector<Diagnostic> validate_program(const Program& p);

class NotAChoiceRule : public std::logic_error {
public:
    NotAChoiceRule() : std::logic_error("rule is not a causal-choice rule") {}
};

/// Replaces the causal-choice rule `r` by the family of disjunctive
/// rules that add `not A_j` next to each positive head atom A_j; the
/// emitted rules share r's label.
Program rchoice_transform(const Program& p, const Rule& r);

/// Canonical text; parse_program(print_program(p)) reproduces p.
std::string print_program(const Program& p);

/// Label for an atom name relative to a program (always atom kind).
Label program_atom(const std::string& name);

/// Render options wired to a program: normal rules and labelled facts
/// feed the head-suffix omission table.
RenderOptions render_options_for(const Program& p, bool omit_normal_heads = true,
                                 bool strip_atoms = false);

}  // namespace caustic

#endif

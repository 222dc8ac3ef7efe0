#include "caustic/syntax.hpp"

#include <algorithm>
#include <map>

namespace caustic {

std::set<std::string> Program::rule_labels() const {
    std::set<std::string> out;
    for (const Rule& r : rules)
        if (!r.fact_label) out.insert(r.label);
    return out;
}

namespace {

struct Token {
    enum class Kind { Ident, Not, Disj, Colon, Comma, Dot, Arrow, ChoiceArrow, End, Bad };
    Kind kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip();
        const int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::Kind::End, "", line, col};
        char c = text_[pos_];
        if (std::islower(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                advance();
            std::string word(text_.substr(start, pos_ - start));
            if (word == "not") return {Token::Kind::Not, word, line, col};
            if (word == "v") return {Token::Kind::Disj, word, line, col};
            return {Token::Kind::Ident, word, line, col};
        }
        if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
            advance();
            advance();
            return {Token::Kind::Arrow, ":-", line, col};
        }
        if (c == '<' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '~') {
            advance();
            advance();
            return {Token::Kind::ChoiceArrow, "<~", line, col};
        }
        advance();
        switch (c) {
            case ':': return {Token::Kind::Colon, ":", line, col};
            case ',': return {Token::Kind::Comma, ",", line, col};
            case '.': return {Token::Kind::Dot, ".", line, col};
            default: return {Token::Kind::Bad, std::string(1, c), line, col};
        }
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

struct Literal {
    bool negated;
    std::string atom;
};

class ProgramParser {
public:
    explicit ProgramParser(std::string_view text) : lexer_(text) { bump(); }

    ParseResult run() {
        Program p;
        while (tok_.kind != Token::Kind::End) {
            if (!statement(p)) recover();
        }
        collect_atoms(p);
        ParseResult result;
        result.errors = std::move(errors_);
        if (result.errors.empty()) {
            auto semantic = validate_program(p);
            result.errors.insert(result.errors.end(), semantic.begin(), semantic.end());
        }
        result.program = std::move(p);
        if (!result.errors.empty() &&
            std::any_of(result.errors.begin(), result.errors.end(),
                        [](const Diagnostic& d) { return d.code == "SyntaxError"; }))
            result.program.reset();
        return result;
    }

private:
    void bump() { tok_ = lexer_.next(); }

    void error(const std::string& message) {
        errors_.push_back({tok_.line, tok_.col, "SyntaxError", message});
    }

    // Skip to the statement terminator after a syntax error.
    void recover() {
        while (tok_.kind != Token::Kind::Dot && tok_.kind != Token::Kind::End) bump();
        if (tok_.kind == Token::Kind::Dot) bump();
    }

    bool literal(Literal& out) {
        out.negated = false;
        if (tok_.kind == Token::Kind::Not) {
            out.negated = true;
            bump();
        }
        if (tok_.kind != Token::Kind::Ident) {
            error("expected atom");
            return false;
        }
        out.atom = tok_.text;
        bump();
        return true;
    }

    static void append_unique(std::vector<std::string>& xs, const std::string& x) {
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }

    bool statement(Program& p) {
        Rule r;
        bool labelled = false;

        if (tok_.kind == Token::Kind::Ident) {
            // Lookahead for "label :": a colon not followed by '-'.
            std::string first = tok_.text;
            Lexer save = lexer_;
            Token save_tok = tok_;
            bump();
            if (tok_.kind == Token::Kind::Colon) {
                r.label = first;
                labelled = true;
                bump();
            } else {
                lexer_ = save;
                tok_ = save_tok;
            }
        }

        // Head literals, possibly none (constraints).
        std::vector<Literal> head;
        if (tok_.kind == Token::Kind::Ident || tok_.kind == Token::Kind::Not) {
            Literal l;
            if (!literal(l)) return false;
            head.push_back(l);
            while (tok_.kind == Token::Kind::Disj) {
                bump();
                if (!literal(l)) return false;
                head.push_back(l);
            }
        }

        bool has_arrow = false;
        if (tok_.kind == Token::Kind::Arrow || tok_.kind == Token::Kind::ChoiceArrow) {
            has_arrow = true;
            if (tok_.kind == Token::Kind::ChoiceArrow) r.kind = RuleKind::CausalChoice;
            bump();
            if (tok_.kind == Token::Kind::Ident || tok_.kind == Token::Kind::Not) {
                Literal l;
                if (!literal(l)) return false;
                if (l.negated)
                    append_unique(r.neg_body, l.atom);
                else
                    append_unique(r.pos_body, l.atom);
                while (tok_.kind == Token::Kind::Comma) {
                    bump();
                    if (!literal(l)) return false;
                    if (l.negated)
                        append_unique(r.neg_body, l.atom);
                    else
                        append_unique(r.pos_body, l.atom);
                }
            }
        }

        if (head.empty() && !has_arrow) {
            error("expected rule head or ':-'");
            return false;
        }
        if (tok_.kind != Token::Kind::Dot) {
            error("expected '.'");
            return false;
        }
        bump();

        for (const Literal& l : head) {
            if (l.negated)
                append_unique(r.neg_head, l.atom);
            else
                append_unique(r.pos_head, l.atom);
        }

        if (!labelled) {
            if (r.is_fact()) {
                r.label = r.pos_head.front();  // fact convention: A : A <-
                r.fact_label = true;
            } else if (r.is_constraint() && r.kind == RuleKind::Regular) {
                r.label = "__c" + std::to_string(++constraint_counter_);
                r.synthetic_label = true;
            } else {
                error("rule requires a label");
                return false;
            }
        } else if (r.is_fact() && r.label == r.pos_head.front()) {
            r.fact_label = true;  // `a: a.` spells the fact convention out
        }

        if (std::find(p.rules.begin(), p.rules.end(), r) == p.rules.end())
            p.rules.push_back(std::move(r));
        return true;
    }

    static void collect_atoms(Program& p) {
        for (const Rule& r : p.rules)
            for (const auto* xs : {&r.pos_head, &r.neg_head, &r.pos_body, &r.neg_body})
                p.atoms.insert(xs->begin(), xs->end());
    }

    Lexer lexer_{""};
    Token tok_{Token::Kind::End, "", 0, 0};
    std::vector<Diagnostic> errors_;
    int constraint_counter_ = 0;
};

// A group of rules sharing one label is legal only when it has the shape
// produced by the choice-to-disjunction rewriting: same body, same
// positive head, and neg heads differing in one witness atom taken from
// the positive head.
bool is_choice_family(const std::vector<const Rule*>& group) {
    const Rule* base = group.front();
    std::set<std::string> witnesses;
    for (const Rule* r : group) {
        if (r->kind != RuleKind::Regular || r->fact_label) return false;
        if (r->pos_body != base->pos_body || r->neg_body != base->neg_body) return false;
        if (std::set<std::string>(r->pos_head.begin(), r->pos_head.end()) !=
            std::set<std::string>(base->pos_head.begin(), base->pos_head.end()))
            return false;
        bool has_witness = false;
        for (const std::string& h : r->neg_head)
            if (std::find(r->pos_head.begin(), r->pos_head.end(), h) != r->pos_head.end()) {
                witnesses.insert(h);
                has_witness = true;
            }
        if (!has_witness) return false;
    }
    return witnesses.size() == group.size();
}

}  // namespace

ParseResult parse_program(std::string_view text) { return ProgramParser(text).run(); }

std::vector<Diagnostic> validate_program(const Program& p) {
    std::vector<Diagnostic> errors;

    std::map<std::string, std::vector<const Rule*>> by_label;
    for (const Rule& r : p.rules)
        if (!r.fact_label) by_label[r.label].push_back(&r);

    for (const auto& [label, group] : by_label) {
        if (group.size() > 1 && !is_choice_family(group))
            errors.push_back({0, 0, "DuplicateLabel", "duplicate rule label '" + label + "'"});
        if (p.atoms.count(label))
            errors.push_back({0, 0, "LabelAtomClash",
                              "rule label '" + label + "' collides with an atom name"});
    }

    for (const Rule& r : p.rules) {
        if (r.kind == RuleKind::CausalChoice && r.pos_head.empty() && r.neg_head.empty())
            errors.push_back({0, 0, "EmptyChoiceHead",
                              "causal-choice rule '" + r.label + "' has an empty head"});
    }
    return errors;
}

Program rchoice_transform(const Program& p, const Rule& r) {
    auto it = std::find(p.rules.begin(), p.rules.end(), r);
    if (it == p.rules.end() || it->kind != RuleKind::CausalChoice) throw NotAChoiceRule();

    Program out;
    out.atoms = p.atoms;
    for (const Rule& existing : p.rules) {
        if (!(existing == r)) {
            out.rules.push_back(existing);
            continue;
        }
        for (const std::string& witness : r.pos_head) {
            Rule emitted = r;
            emitted.kind = RuleKind::Regular;
            emitted.neg_head.clear();
            emitted.neg_head.push_back(witness);
            emitted.neg_head.insert(emitted.neg_head.end(), r.neg_head.begin(),
                                    r.neg_head.end());
            out.rules.push_back(std::move(emitted));
        }
    }
    return out;
}

std::string print_program(const Program& p) {
    std::string out;
    for (const Rule& r : p.rules) {
        if (r.fact_label) {
            out += r.label + ".\n";
            continue;
        }
        if (!r.synthetic_label) out += r.label + ": ";
        bool first = true;
        for (const std::string& h : r.pos_head) {
            if (!first) out += " v ";
            out += h;
            first = false;
        }
        for (const std::string& h : r.neg_head) {
            if (!first) out += " v ";
            out += "not " + h;
            first = false;
        }
        if (!r.pos_body.empty() || !r.neg_body.empty() || r.is_constraint() ||
            r.kind == RuleKind::CausalChoice) {
            if (!first) out += " ";
            out += (r.kind == RuleKind::CausalChoice) ? "<~" : ":-";
            first = true;
            for (const std::string& b : r.pos_body) {
                out += first ? " " : ", ";
                out += b;
                first = false;
            }
            for (const std::string& b : r.neg_body) {
                out += first ? " " : ", ";
                out += "not " + b;
                first = false;
            }
        }
        out += ".\n";
    }
    return out;
}

Label program_atom(const std::string& name) { return atom_label(name); }

RenderOptions render_options_for(const Program& p, bool omit_normal_heads, bool strip_atoms) {
    RenderOptions opts;
    opts.omit_normal_heads = omit_normal_heads;
    opts.strip_atom_edges = strip_atoms;
    for (const Rule& r : p.rules)
        if (r.kind == RuleKind::Regular && r.is_normal() && !r.fact_label)
            opts.normal_heads[r.label] = r.pos_head.front();
    return opts;
}

}  // namespace caustic

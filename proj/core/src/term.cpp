#include "caustic/term.hpp"

#include <cctype>

namespace caustic {

Term Term::leaf(Label l) {
    Term t;
    t.kind = Kind::Leaf;
    t.label = std::move(l);
    return t;
}

Term Term::product(std::vector<Term> ts) {
    Term t;
    t.kind = Kind::Product;
    t.args = std::move(ts);
    return t;
}

Term Term::sum(std::vector<Term> ts) {
    Term t;
    t.kind = Kind::Sum;
    t.args = std::move(ts);
    return t;
}

Term Term::app(Term lhs, Term rhs) {
    Term t;
    t.kind = Kind::App;
    t.args.push_back(std::move(lhs));
    t.args.push_back(std::move(rhs));
    return t;
}

CausalValue eval_term(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Leaf:
            return CausalValue::of(CausalGraph::vertex(t.label));
        case Term::Kind::Product: {
            CausalValue v = CausalValue::one();
            for (const Term& a : t.args) v = value_product(v, eval_term(a));
            return v;
        }
        case Term::Kind::Sum: {
            CausalValue v = CausalValue::zero();
            for (const Term& a : t.args) v = value_sum(v, eval_term(a));
            return v;
        }
        case Term::Kind::App:
            return value_apply(eval_term(t.args[0]), eval_term(t.args[1]));
    }
    return CausalValue::zero();
}

namespace {

Term graph_to_term(const CausalGraph& g) {
    std::vector<Term> factors;
    for (const auto& [a, b] : g.edges()) {
        if (a == b)
            factors.push_back(Term::leaf(a));  // isolated vertex
        else
            factors.push_back(Term::app(Term::leaf(a), Term::leaf(b)));
    }
    if (factors.size() == 1) return factors.front();
    return Term::product(std::move(factors));
}

}  // namespace

Term value_to_term(const CausalValue& v) {
    std::vector<Term> addends;
    for (const CausalGraph& g : v.graphs()) addends.push_back(graph_to_term(g));
    if (addends.size() == 1) return addends.front();
    return Term::sum(std::move(addends));
}

namespace {

int precedence(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Sum: return 0;
        case Term::Kind::Product: return 1;
        case Term::Kind::App: return 2;
        case Term::Kind::Leaf: return 3;
    }
    return 3;
}

void render(const Term& t, int min_prec, std::string& out) {
    const bool parens = precedence(t) < min_prec;
    if (parens) out += '(';
    switch (t.kind) {
        case Term::Kind::Leaf:
            out += t.label.name;
            break;
        case Term::Kind::Sum:
            if (t.args.empty()) {
                out += '0';
            } else {
                for (std::size_t i = 0; i < t.args.size(); ++i) {
                    if (i) out += " + ";
                    render(t.args[i], 1, out);
                }
            }
            break;
        case Term::Kind::Product:
            if (t.args.empty()) {
                out += '1';
            } else {
                for (std::size_t i = 0; i < t.args.size(); ++i) {
                    if (i) out += '*';
                    render(t.args[i], 2, out);
                }
            }
            break;
        case Term::Kind::App:
            render(t.args[0], 2, out);
            out += "·";
            render(t.args[1], 3, out);  // keep right-nested applications bracketed
            break;
    }
    if (parens) out += ')';
}

struct TermParser {
    std::string_view text;
    std::size_t pos = 0;
    const std::set<std::string>& atoms;
    std::string error;

    explicit TermParser(std::string_view t, const std::set<std::string>& a)
        : text(t), atoms(a) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool eat_apply_op() {
        skip_ws();
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
            return true;
        }
        // UTF-8 middle dot
        if (pos + 1 < text.size() && text[pos] == '\xc2' && text[pos + 1] == '\xb7') {
            pos += 2;
            return true;
        }
        return false;
    }

    std::optional<std::string> ident() {
        skip_ws();
        if (pos >= text.size() || !std::islower(static_cast<unsigned char>(text[pos])))
            return std::nullopt;
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }

    Label make_label(const std::string& name) const {
        return atoms.count(name) ? atom_label(name) : rule_label(name);
    }

    std::optional<Term> primary() {
        skip_ws();
        if (pos >= text.size()) {
            error = "unexpected end of term";
            return std::nullopt;
        }
        if (text[pos] == '0') {
            ++pos;
            return Term::zero();
        }
        if (text[pos] == '1') {
            ++pos;
            return Term::one();
        }
        if (eat('(')) {
            auto t = sum();
            if (!t) return std::nullopt;
            if (!eat(')')) {
                error = "expected ')'";
                return std::nullopt;
            }
            return t;
        }
        auto name = ident();
        if (!name) {
            error = "expected label, '0', '1' or '('";
            return std::nullopt;
        }
        Term t = Term::leaf(make_label(*name));
        if (eat('^')) {
            auto sup = ident();
            if (!sup) {
                error = "expected atom after '^'";
                return std::nullopt;
            }
            t = Term::app(std::move(t), Term::leaf(make_label(*sup)));
        }
        return t;
    }

    std::optional<Term> application() {
        auto t = primary();
        if (!t) return std::nullopt;
        while (eat_apply_op()) {
            auto rhs = primary();
            if (!rhs) return std::nullopt;
            t = Term::app(std::move(*t), std::move(*rhs));
        }
        return t;
    }

    std::optional<Term> product() {
        auto t = application();
        if (!t) return std::nullopt;
        std::vector<Term> factors{std::move(*t)};
        while (eat('*')) {
            auto rhs = application();
            if (!rhs) return std::nullopt;
            factors.push_back(std::move(*rhs));
        }
        if (factors.size() == 1) return std::move(factors.front());
        return Term::product(std::move(factors));
    }

    std::optional<Term> sum() {
        auto t = product();
        if (!t) return std::nullopt;
        std::vector<Term> addends{std::move(*t)};
        while (eat('+')) {
            auto rhs = product();
            if (!rhs) return std::nullopt;
            addends.push_back(std::move(*rhs));
        }
        if (addends.size() == 1) return std::move(addends.front());
        return Term::sum(std::move(addends));
    }
};

}  // namespace

std::string term_to_string(const Term& t) {
    std::string out;
    render(t, 0, out);
    return out;
}

std::optional<Term> parse_term(std::string_view text, const std::set<std::string>& atom_names,
                               std::string* error) {
    TermParser p(text, atom_names);
    auto t = p.sum();
    if (t) {
        p.skip_ws();
        if (p.pos != text.size()) {
            t.reset();
            p.error = "trailing input after term";
        }
    }
    if (!t && error) *error = p.error;
    return t;
}

}  // namespace caustic

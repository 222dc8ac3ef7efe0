#ifndef CAUSTIC_TERM_HPP
#define CAUSTIC_TERM_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "caustic/algebra.hpp"

namespace caustic {

/// A finite algebraic term over labels with product `*`, addition `+`
/// and application `.`. The empty sum is 0, the empty product is 1.
struct Term {
    enum class Kind { Leaf, Product, Sum, App };

    Kind kind = Kind::Sum;
    Label label;             // Leaf only
    std::vector<Term> args;  // Product/Sum: any arity; App: exactly two

    static Term leaf(Label l);
    static Term product(std::vector<Term> ts);
    static Term sum(std::vector<Term> ts);
    static Term app(Term lhs, Term rhs);
    static Term zero() { return sum({}); }
    static Term one() { return product({}); }

    bool operator==(const Term&) const = default;
};

/// Normalization through the graph algebra: terms equal under the value
/// axioms evaluate to the identical antichain.
CausalValue eval_term(const Term& t);

/// Canonical representative term of a value: a sum over member graphs
/// of products over edges, reflexive edges of connected vertices elided
/// and isolated vertices emitted as bare labels.
/// eval_term(value_to_term(v)) == v.
Term value_to_term(const CausalValue& v);

/// Plain rendering with `+`, `*`, `·` and minimal parentheses.
std::string term_to_string(const Term& t);

/// Parses the term syntax: `+` < `*` < application (`.` or `·`),
/// parentheses, `0`, `1`, and `r^a` sugar for `r . a`. Names listed in
/// `atom_names` become atom labels, everything else a rule label.
/// On failure returns nullopt and fills `error`.
std::optional<Term> parse_term(std::string_view text,
                               const std::set<std::string>& atom_names,
                               std::string* error = nullptr);

}  // namespace caustic

#endif

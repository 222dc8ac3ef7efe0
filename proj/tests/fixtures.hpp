// Shared example programs used across the test suites.

#ifndef CAUSTIC_TESTS_FIXTURES_HPP
#define CAUSTIC_TESTS_FIXTURES_HPP

#include <stdexcept>
#include <string_view>

#include "caustic/syntax.hpp"
#include "caustic/term.hpp"

namespace caustic::testing {

// Firing-squad chain: one derivation path.
inline constexpr std::string_view kSquad =
    "r1: dead :- shoot.\n"
    "r2: shoot :- harvey.\n"
    "harvey.\n";

// Coin-flip squad: a disjunctive fork, two causal stable models.
inline constexpr std::string_view kCoin =
    "r1: dead :- shoot.\n"
    "r2: shoot :- tails.\n"
    "r3: head v tails :- harvey.\n"
    "harvey.\n";

// Two labelled commands to toss: alternative causes must stay together.
inline constexpr std::string_view kToss =
    "r1: head v tails :- toss.\n"
    "a: toss.\n"
    "b: toss.\n";

// Disjunctive fact next to a plain fact: only one stable model.
inline constexpr std::string_view kTossFact =
    "r1: head v tails.\n"
    "head.\n";

// Mutual support on top of a disjunction: one standard model, two causal.
inline constexpr std::string_view kMutual =
    "r1: a v b.\n"
    "r2: a :- b.\n"
    "r3: b :- a.\n";

// Coin-flip squad with an abnormality default.
inline constexpr std::string_view kCoinDefault =
    "r1: dead :- shoot, not ab.\n"
    "r2: shoot :- tails.\n"
    "r3: head v tails :- harvey.\n"
    "harvey.\n"
    "r5: ab :- wet.\n"
    "r6: ab :- bulletproof.\n";

// Same, with the default defeated.
inline constexpr std::string_view kCoinDefaultWet =
    "r1: dead :- shoot, not ab.\n"
    "r2: shoot :- tails.\n"
    "r3: head v tails :- harvey.\n"
    "harvey.\n"
    "r5: ab :- wet.\n"
    "r6: ab :- bulletproof.\n"
    "wet.\n";

// Negated-head disjunction: fever may or may not be concluded.
inline constexpr std::string_view kFeverFree =
    "r1: fever v not fever :- infection.\n"
    "infection.\n";

// Adding an unconditional fever rule pins the justification down.
inline constexpr std::string_view kFeverForced =
    "r1: fever v not fever :- infection.\n"
    "r2: fever.\n"
    "infection.\n";

// The same scenario with a causal-choice rule: the alternative cause
// may be adopted or not, giving two models over one atom set.
inline constexpr std::string_view kFeverChoice =
    "r1: fever <~ infection.\n"
    "r2: fever.\n"
    "infection.\n";

// Diamond with one root fact.
inline constexpr std::string_view kDiamond =
    "r1: a.\n"
    "r3: b :- a.\n"
    "r4: c :- a.\n"
    "r5: d :- b, c.\n";

// Diamond with two root facts: mixed derivations are redundant.
inline constexpr std::string_view kDiamondTwin =
    "r1: a.\n"
    "r2: a.\n"
    "r3: b :- a.\n"
    "r4: c :- a.\n"
    "r5: d :- b, c.\n";

// Two independent causes of death feeding a common consequence.
inline constexpr std::string_view kTwoCauses =
    "r1: dead :- shoot, loaded.\n"
    "r2: shoot :- harvey.\n"
    "harvey.\n"
    "loaded.\n"
    "joker_stab.\n"
    "r4: dead :- joker_stab.\n"
    "r5: no_heartbeat :- dead.\n";

inline Program must_parse(std::string_view text) {
    ParseResult r = parse_program(text);
    if (!r.ok()) throw std::runtime_error("fixture failed to parse");
    return *r.program;
}

inline CausalValue must_eval(std::string_view term, const Program& p) {
    std::string error;
    auto t = parse_term(term, p.atoms, &error);
    if (!t) throw std::runtime_error("bad expected term: " + error);
    return eval_term(*t);
}

inline const Rule& rule_named(const Program& p, const std::string& label) {
    for (const Rule& r : p.rules)
        if (r.label == label) return r;
    throw std::runtime_error("no rule labelled " + label);
}

}  // namespace caustic::testing

#endif

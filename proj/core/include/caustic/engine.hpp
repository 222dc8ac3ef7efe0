#ifndef CAUSTIC_ENGINE_HPP
#define CAUSTIC_ENGINE_HPP

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "caustic/algebra.hpp"
#include "caustic/syntax.hpp"

namespace caustic {

/// Total map from atoms to causal values; atoms not stored hold 0.
/// The default-constructed interpretation is the bottom element.
class Interpretation {
public:
    Interpretation() = default;

    const CausalValue& at(const std::string& atom) const;
    void set(const std::string& atom, CausalValue v);

    std::set<std::string> true_atoms() const;
    const std::map<std::string, CausalValue>& entries() const { return values_; }

    bool operator==(const Interpretation&) const = default;
    /// Canonical order: (true-atom count, atom set, values).
    bool operator<(const Interpretation& other) const;

private:
    std::map<std::string, CausalValue> values_;  // nonzero entries only
};

/// Pointwise value order.
bool interp_leq(const Interpretation& i, const Interpretation& j);
/// The weak order: pointwise <= or strict inclusion of true-atom sets.
bool interp_sqleq(const Interpretation& i, const Interpretation& j);
bool interp_sqless(const Interpretation& i, const Interpretation& j);
/// Collapses every nonzero value to 1.
Interpretation standardize(const Interpretation& i);

/// Brute-force safety bounds; exceeding one raises TooLargeError rather
/// than truncating.
struct EngineLimits {
    std::size_t max_atoms = 16;       // subset enumeration
    std::size_t max_selections = 4096;
    std::size_t max_choices = 10;     // 2^max_choices reduct candidates
    std::size_t max_iterations = 100000;
    std::size_t jobs = 1;             // parallel selection evaluation
};

class TooLargeError : public std::runtime_error {
public:
    TooLargeError(const std::string& bound, std::size_t limit)
        : std::runtime_error("problem exceeds " + bound + " bound (" +
                             std::to_string(limit) + ")"),
          bound_(bound) {}
    const std::string& bound() const { return bound_; }

private:
    std::string bound_;
};

class IterationBoundError : public std::runtime_error {
public:
    IterationBoundError()
        : std::runtime_error("fixpoint iteration exceeded the safety cap") {}
};

/// Product of the body literal values; the empty body yields 1.
CausalValue eval_body(const Interpretation& i, const Rule& r);

/// Rule satisfaction: some negative head atom is 0, or some positive
/// head atom H has body.r.H <= I(H), or the head is empty (constraint)
/// and the body value is 0.
bool satisfies_rule(const Interpretation& i, const Rule& r);

/// Three-step reduct wrt a set of true atoms; requires no choice rules.
Program gl_reduct(const Program& p, const std::set<std::string>& s);

/// All subset-minimal closed sets of the program's reduct wrt themselves,
/// by exhaustive subset enumeration.
std::vector<std::set<std::string>> standard_stable_models(const Program& p,
                                                          const EngineLimits& limits = {});

/// Least fixpoint of the one-step operator on a positive normal program;
/// constraints are ignored here.
Interpretation least_causal_model(const Program& p, const EngineLimits& limits = {});

/// Weak-order-minimal models of a positive program, via selection
/// enumeration over disjunctive rule heads.
std::vector<Interpretation> causal_stable_models_positive(const Program& p,
                                                          const EngineLimits& limits = {});

/// Causal stable models of a program without choice rules.
std::vector<Interpretation> causal_stable_models(const Program& p,
                                                 const EngineLimits& limits = {});

/// Causal stable models of a program that may contain causal-choice
/// rules, by enumerating the kept-rule subsets of the choice reduct.
std::vector<Interpretation> causal_stable_models_choice(const Program& p,
                                                        const EngineLimits& limits = {});

}  // namespace caustic

#endif

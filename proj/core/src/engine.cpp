#include "caustic/engine.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

namespace caustic {

namespace {

const CausalValue kZero{};

}  // namespace

const CausalValue& Interpretation::at(const std::string& atom) const {
    auto it = values_.find(atom);
    return it == values_.end() ? kZero : it->second;
}

void Interpretation::set(const std::string& atom, CausalValue v) {
    if (v.is_zero())
        values_.erase(atom);
    else
        values_[atom] = std::move(v);
}

std::set<std::string> Interpretation::true_atoms() const {
    std::set<std::string> out;
    for (const auto& [atom, value] : values_) out.insert(atom);
    return out;
}

bool Interpretation::operator<(const Interpretation& other) const {
    if (values_.size() != other.values_.size()) return values_.size() < other.values_.size();
    auto a = true_atoms(), b = other.true_atoms();
    if (a != b) return a < b;
    return values_ < other.values_;
}

bool interp_leq(const Interpretation& i, const Interpretation& j) {
    for (const auto& [atom, value] : i.entries())
        if (!value_leq(value, j.at(atom))) return false;
    return true;
}

bool interp_sqleq(const Interpretation& i, const Interpretation& j) {
    if (interp_leq(i, j)) return true;
    auto a = i.true_atoms(), b = j.true_atoms();
    return a != b && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool interp_sqless(const Interpretation& i, const Interpretation& j) {
    return !(i == j) && interp_sqleq(i, j);
}

Interpretation standardize(const Interpretation& i) {
    Interpretation out;
    for (const auto& [atom, value] : i.entries()) out.set(atom, CausalValue::one());
    return out;
}

CausalValue eval_body(const Interpretation& i, const Rule& r) {
    CausalValue v = CausalValue::one();
    for (const std::string& b : r.pos_body) {
        v = value_product(v, i.at(b));
        if (v.is_zero()) return v;
    }
    for (const std::string& b : r.neg_body) {
        if (!i.at(b).is_zero()) return CausalValue::zero();
    }
    return v;
}

bool satisfies_rule(const Interpretation& i, const Rule& r) {
    CausalValue body = eval_body(i, r);
    for (const std::string& h : r.neg_head)
        if (i.at(h).is_zero() || body.is_zero()) return true;
    if (body.is_zero() && r.pos_head.empty()) return true;  // constraints included
    CausalValue labelled = value_apply(body, CausalValue::of(CausalGraph::vertex(r.vertex_label())));
    for (const std::string& h : r.pos_head) {
        CausalValue derived =
            value_apply(labelled, CausalValue::of(CausalGraph::vertex(atom_label(h))));
        if (value_leq(derived, i.at(h))) return true;
    }
    return false;
}

Program gl_reduct(const Program& p, const std::set<std::string>& s) {
    Program out;
    out.atoms = p.atoms;
    for (const Rule& r : p.rules) {
        if (r.kind != RuleKind::Regular)
            throw std::logic_error("gl_reduct: choice rules must be resolved first");
        bool dropped = false;
        for (const std::string& b : r.neg_body)
            if (s.count(b)) { dropped = true; break; }
        for (const std::string& h : r.neg_head)
            if (!dropped && !s.count(h)) { dropped = true; break; }
        if (dropped) continue;
        Rule kept = r;
        kept.neg_body.clear();
        kept.neg_head.clear();
        out.rules.push_back(std::move(kept));
    }
    return out;
}

namespace {

struct MaskedRule {
    std::uint32_t pos_head = 0, neg_head = 0, pos_body = 0, neg_body = 0;
};

struct MaskedProgram {
    std::vector<std::string> atoms;
    std::vector<MaskedRule> rules;
};

MaskedProgram mask_program(const Program& p) {
    MaskedProgram mp;
    mp.atoms.assign(p.atoms.begin(), p.atoms.end());
    auto index = [&](const std::string& a) {
        return static_cast<std::uint32_t>(
            std::lower_bound(mp.atoms.begin(), mp.atoms.end(), a) - mp.atoms.begin());
    };
    for (const Rule& r : p.rules) {
        MaskedRule mr;
        for (const std::string& a : r.pos_head) mr.pos_head |= 1u << index(a);
        for (const std::string& a : r.neg_head) mr.neg_head |= 1u << index(a);
        for (const std::string& a : r.pos_body) mr.pos_body |= 1u << index(a);
        for (const std::string& a : r.neg_body) mr.neg_body |= 1u << index(a);
        mp.rules.push_back(mr);
    }
    return mp;
}

// Is T closed under the reduct of the program wrt S?
bool closed_under_reduct(const MaskedProgram& mp, std::uint32_t t, std::uint32_t s,
                         std::uint32_t universe) {
    for (const MaskedRule& r : mp.rules) {
        if ((r.neg_body & s) != 0) continue;              // rule removed by step 1
        if ((r.neg_head & (universe & ~s)) != 0) continue;  // rule removed by step 2
        if ((r.pos_body & t) != r.pos_body) continue;
        if ((r.pos_head & t) == 0) return false;
    }
    return true;
}

}  // namespace

std::vector<std::set<std::string>> standard_stable_models(const Program& p,
                                                          const EngineLimits& limits) {
    for (const Rule& r : p.rules)
        if (r.kind != RuleKind::Regular)
            throw std::logic_error("standard_stable_models: program has choice rules");
    if (p.atoms.size() > limits.max_atoms) throw TooLargeError("max-atoms", limits.max_atoms);

    MaskedProgram mp = mask_program(p);
    const std::uint32_t n = static_cast<std::uint32_t>(mp.atoms.size());
    const std::uint32_t universe = n == 32 ? ~0u : (1u << n) - 1;

    std::vector<std::set<std::string>> out;
    for (std::uint32_t s = 0; s <= universe; ++s) {
        if (!closed_under_reduct(mp, s, s, universe)) {
            if (s == universe) break;
            continue;
        }
        bool minimal = true;
        if (s != 0) {
            // Proper subsets of s, largest first.
            for (std::uint32_t t = (s - 1) & s;; t = (t - 1) & s) {
                if (closed_under_reduct(mp, t, s, universe)) { minimal = false; break; }
                if (t == 0) break;
            }
        }
        if (minimal) {
            std::set<std::string> model;
            for (std::uint32_t i = 0; i < n; ++i)
                if (s & (1u << i)) model.insert(mp.atoms[i]);
            out.push_back(std::move(model));
        }
        if (s == universe) break;
    }
    return out;
}

Interpretation least_causal_model(const Program& p, const EngineLimits& limits) {
    std::vector<const Rule*> deriving;
    for (const Rule& r : p.rules) {
        if (r.is_constraint()) continue;
        if (r.kind != RuleKind::Regular || !r.is_normal() || !r.neg_body.empty())
            throw std::logic_error("least_causal_model: program must be positive and normal");
        deriving.push_back(&r);
    }

    Interpretation current;
    for (std::size_t step = 0; step < limits.max_iterations; ++step) {
        Interpretation next;
        for (const Rule* r : deriving) {
            const std::string& head = r->pos_head.front();
            CausalValue body = eval_body(current, *r);
            if (body.is_zero()) continue;
            CausalValue derived = value_apply(
                value_apply(body, CausalValue::of(CausalGraph::vertex(r->vertex_label()))),
                CausalValue::of(CausalGraph::vertex(atom_label(head))));
            next.set(head, value_sum(next.at(head), derived));
        }
        if (next == current) return current;
        current = std::move(next);
    }
    throw IterationBoundError();
}

namespace {

std::vector<Interpretation> dedupe_sort(std::vector<Interpretation> pool) {
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    return pool;
}

std::vector<Interpretation> minimal_of(std::vector<Interpretation> pool) {
    pool = dedupe_sort(std::move(pool));
    std::vector<Interpretation> out;
    for (const Interpretation& i : pool) {
        bool dominated = false;
        for (const Interpretation& j : pool)
            if (interp_sqless(j, i)) { dominated = true; break; }
        if (!dominated) out.push_back(i);
    }
    return out;
}

}  // namespace

std::vector<Interpretation> causal_stable_models_positive(const Program& p,
                                                          const EngineLimits& limits) {
    std::vector<const Rule*> disjunctive;
    std::vector<Rule> constraints;
    Program base;
    base.atoms = p.atoms;
    for (const Rule& r : p.rules) {
        if (r.kind != RuleKind::Regular || !r.neg_body.empty() || !r.neg_head.empty())
            throw std::logic_error("causal_stable_models_positive: program must be positive");
        if (r.is_constraint())
            constraints.push_back(r);
        else if (r.pos_head.size() > 1)
            disjunctive.push_back(&r);
        else
            base.rules.push_back(r);
    }

    std::size_t selection_count = 1;
    for (const Rule* r : disjunctive) {
        selection_count *= r->pos_head.size();
        if (selection_count > limits.max_selections)
            throw TooLargeError("max-selections", limits.max_selections);
    }

    auto evaluate = [&](std::size_t index) -> std::optional<Interpretation> {
        Program selected = base;
        std::size_t rest = index;
        for (const Rule* r : disjunctive) {
            Rule chosen = *r;
            chosen.pos_head = {r->pos_head[rest % r->pos_head.size()]};
            rest /= r->pos_head.size();
            selected.rules.push_back(std::move(chosen));
        }
        Interpretation lfp = least_causal_model(selected, limits);
        for (const Rule& c : constraints)
            if (!eval_body(lfp, c).is_zero()) return std::nullopt;
        return lfp;
    };

    std::vector<std::optional<Interpretation>> results(selection_count);
    const std::size_t jobs = std::max<std::size_t>(1, limits.jobs);
    if (jobs == 1 || selection_count < 2 * jobs) {
        for (std::size_t i = 0; i < selection_count; ++i) results[i] = evaluate(i);
    } else {
        std::vector<std::thread> workers;
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (std::size_t w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < selection_count; i += jobs)
                        results[i] = evaluate(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (std::thread& t : workers) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::vector<Interpretation> pool;
    for (auto& r : results)
        if (r) pool.push_back(std::move(*r));
    return minimal_of(std::move(pool));
}

std::vector<Interpretation> causal_stable_models(const Program& p, const EngineLimits& limits) {
    std::vector<Interpretation> out;
    for (const std::set<std::string>& s : standard_stable_models(p, limits)) {
        Program reduct = gl_reduct(p, s);
        for (Interpretation& i : causal_stable_models_positive(reduct, limits))
            if (i.true_atoms() == s) out.push_back(std::move(i));
    }
    return dedupe_sort(std::move(out));
}

std::vector<Interpretation> causal_stable_models_choice(const Program& p,
                                                        const EngineLimits& limits) {
    std::vector<const Rule*> choices;
    Program regular;
    regular.atoms = p.atoms;
    for (const Rule& r : p.rules) {
        if (r.kind == RuleKind::CausalChoice)
            choices.push_back(&r);
        else
            regular.rules.push_back(r);
    }
    if (choices.size() > limits.max_choices)
        throw TooLargeError("max-choices", limits.max_choices);

    auto as_regular = [](const Rule& r) {
        Rule out = r;
        out.kind = RuleKind::Regular;
        return out;
    };

    std::vector<Interpretation> out;
    for (std::uint32_t kept = 0; kept < (1u << choices.size()); ++kept) {
        Program candidate = regular;
        for (std::size_t c = 0; c < choices.size(); ++c)
            if (kept & (1u << c)) candidate.rules.push_back(as_regular(*choices[c]));
        for (Interpretation& i : causal_stable_models(candidate, limits)) {
            bool consistent = true;
            for (std::size_t c = 0; c < choices.size(); ++c) {
                const bool in_reduct = (kept & (1u << c)) != 0;
                if (satisfies_rule(i, as_regular(*choices[c])) != in_reduct) {
                    consistent = false;
                    break;
                }
            }
            if (consistent) out.push_back(std::move(i));
        }
    }
    return dedupe_sort(std::move(out));
}

}  // namespace caustic

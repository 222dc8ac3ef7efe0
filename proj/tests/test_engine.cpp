#include "caustic/engine.hpp"

#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

TEST_SUITE_BEGIN("engine");

using namespace caustic;
using namespace caustic::testing;

namespace {

std::set<std::set<std::string>> atom_sets(const std::vector<Interpretation>& models) {
    std::set<std::set<std::string>> out;
    for (const Interpretation& i : models) out.insert(i.true_atoms());
    return out;
}

std::set<std::set<std::string>> as_set(const std::vector<std::set<std::string>>& models) {
    return {models.begin(), models.end()};
}

}  // namespace

TEST_CASE("interpretations store only nonzero values") {
    Interpretation i;
    CHECK(i.at("a").is_zero());
    i.set("a", CausalValue::one());
    CHECK(i.true_atoms() == std::set<std::string>{"a"});
    i.set("a", CausalValue::zero());
    CHECK(i == Interpretation{});
}

TEST_CASE("interpretation orders and standardization") {
    Interpretation small, big;
    small.set("a", CausalValue::of(CausalGraph::vertex(atom_label("a"))));
    big = small;
    big.set("b", CausalValue::one());
    CHECK(interp_leq(small, big));
    CHECK(interp_sqless(small, big));
    CHECK_FALSE(interp_sqleq(big, small));
    CHECK(small < big);

    Interpretation st = standardize(small);
    CHECK(st.at("a").is_one());
    CHECK(st.true_atoms() == small.true_atoms());
}

TEST_CASE("the weak order extends the pointwise order by atom inclusion") {
    // Same atom set, incomparable values: only the pointwise branch applies.
    Interpretation i, j;
    i.set("a", CausalValue::of(CausalGraph::vertex(rule_label("r1"))));
    j.set("a", CausalValue::of(CausalGraph::vertex(rule_label("r2"))));
    CHECK_FALSE(interp_sqleq(i, j));
    // Distinct atom sets: inclusion wins even with incomparable values.
    j.set("b", CausalValue::one());
    CHECK(interp_sqleq(i, j));
}

TEST_CASE("eval_body multiplies the positive literals") {
    Program p = must_parse(kSquad);
    Interpretation i;
    CHECK(eval_body(i, rule_named(p, "harvey")).is_one());  // empty body
    CHECK(eval_body(i, rule_named(p, "r2")).is_zero());     // harvey still 0
    i.set("harvey", must_eval("harvey", p));
    CHECK(eval_body(i, rule_named(p, "r2")) == must_eval("harvey", p));
}

TEST_CASE("negative body literals gate the body value") {
    Program p = must_parse(kCoinDefault);
    Interpretation i;
    i.set("shoot", CausalValue::one());
    CHECK(eval_body(i, rule_named(p, "r1")).is_one());
    i.set("ab", CausalValue::one());
    CHECK(eval_body(i, rule_named(p, "r1")).is_zero());
}

TEST_CASE("satisfies_rule on facts and derived atoms") {
    Program p = must_parse(kSquad);
    Interpretation i;
    CHECK_FALSE(satisfies_rule(i, rule_named(p, "harvey")));
    i.set("harvey", must_eval("harvey", p));
    CHECK(satisfies_rule(i, rule_named(p, "harvey")));
    CHECK_FALSE(satisfies_rule(i, rule_named(p, "r2")));
    i.set("shoot", must_eval("harvey . r2 . shoot", p));
    CHECK(satisfies_rule(i, rule_named(p, "r2")));
}

TEST_CASE("satisfies_rule treats constraints and negative heads") {
    Program p = must_parse("r1: a v not b :- c.\n:- d.\nb.\nc.\nd.\n");
    Interpretation i;
    // Empty interpretation: b is 0, so the negative head satisfies r1,
    // and d is 0, so the constraint holds.
    CHECK(satisfies_rule(i, rule_named(p, "r1")));
    for (const Rule& r : p.rules)
        if (r.is_constraint()) CHECK(satisfies_rule(i, r));
    i.set("b", must_eval("b", p));
    i.set("c", must_eval("c", p));
    CHECK_FALSE(satisfies_rule(i, rule_named(p, "r1")));
    i.set("a", must_eval("c . r1 . a", p));
    CHECK(satisfies_rule(i, rule_named(p, "r1")));
    i.set("d", CausalValue::one());
    for (const Rule& r : p.rules)
        if (r.is_constraint()) CHECK_FALSE(satisfies_rule(i, r));
}

TEST_CASE("distributed cause splitting does not satisfy a disjunction") {
    Program p = must_parse(kToss);
    const Rule& r1 = rule_named(p, "r1");
    Interpretation split;
    split.set("toss", must_eval("a . toss + b . toss", p));
    split.set("head", must_eval("a . toss . r1 . head", p));
    split.set("tails", must_eval("b . toss . r1 . tails", p));
    CHECK_FALSE(satisfies_rule(split, r1));
    Interpretation joint;
    joint.set("toss", must_eval("a . toss + b . toss", p));
    joint.set("head", must_eval("a . toss . r1 . head + b . toss . r1 . head", p));
    CHECK(satisfies_rule(joint, r1));
}

TEST_CASE("gl_reduct follows the three steps") {
    Program p = must_parse("r1: a :- not b.\nr2: b v not b.\n");
    Program wrt_b = gl_reduct(p, {"b"});
    REQUIRE(wrt_b.rules.size() == 1);
    CHECK(wrt_b.rules[0].label == "r2");
    CHECK(wrt_b.rules[0].neg_head.empty());
    CHECK(wrt_b.rules[0].pos_head == std::vector<std::string>{"b"});
    Program wrt_empty = gl_reduct(p, {});
    REQUIRE(wrt_empty.rules.size() == 1);
    CHECK(wrt_empty.rules[0].label == "r1");
    CHECK(wrt_empty.rules[0].neg_body.empty());
}

TEST_CASE("gl_reduct refuses choice rules") {
    Program p = must_parse(kFeverChoice);
    CHECK_THROWS_AS(gl_reduct(p, {}), std::logic_error);
}

TEST_CASE("standard stable models of the fixtures") {
    CHECK(as_set(standard_stable_models(must_parse(kSquad))) ==
          std::set<std::set<std::string>>{{"dead", "harvey", "shoot"}});
    CHECK(as_set(standard_stable_models(must_parse(kCoin))) ==
          std::set<std::set<std::string>>{{"harvey", "head"},
                                          {"dead", "harvey", "shoot", "tails"}});
    CHECK(as_set(standard_stable_models(must_parse(kMutual))) ==
          std::set<std::set<std::string>>{{"a", "b"}});
    CHECK(standard_stable_models(must_parse("r1: a :- not a.\n")).empty());
}

TEST_CASE("standard stable models match the oracle on random programs") {
    ProgramGen gen(4001);
    for (int i = 0; i < 150; ++i) {
        Program p = gen.random(5, 6, 2, true);
        CHECK(as_set(standard_stable_models(p)) == oracle_stable_models(p));
    }
}

TEST_CASE("atom bound raises instead of truncating") {
    EngineLimits limits;
    limits.max_atoms = 2;
    try {
        standard_stable_models(must_parse(kCoin), limits);
        FAIL("expected TooLargeError");
    } catch (const TooLargeError& e) {
        CHECK(e.bound() == "max-atoms");
    }
}

TEST_CASE("least causal model of the chain program") {
    Program p = must_parse(kSquad);
    Interpretation lfp = least_causal_model(p);
    CHECK(lfp.at("harvey") == must_eval("harvey", p));
    CHECK(lfp.at("shoot") == must_eval("harvey . r2 . shoot", p));
    CHECK(lfp.at("dead") == must_eval("harvey . r2 . shoot . r1 . dead", p));
}

TEST_CASE("least causal model accumulates alternative derivations") {
    Program p = must_parse(kDiamondTwin);
    Interpretation lfp = least_causal_model(p);
    CHECK(lfp.at("a") == must_eval("r1 . a + r2 . a", p));
    CHECK(lfp.at("d").graphs().size() == 2);
}

TEST_CASE("least causal model requires positive normal programs") {
    CHECK_THROWS_AS(least_causal_model(must_parse(kCoin)), std::logic_error);
    CHECK_THROWS_AS(least_causal_model(must_parse("r1: a :- not b.\n")),
                    std::logic_error);
}

TEST_CASE("positive disjunctive models are weak-order minimal") {
    Program p = must_parse(kMutual);
    auto models = causal_stable_models_positive(p);
    REQUIRE(models.size() == 2);
    CHECK(models[0].at("a") == must_eval("r1 . a", p));
    CHECK(models[0].at("b") == must_eval("r1 . a . r3 . b", p));
    CHECK(models[1].at("a") == must_eval("r1 . b . r2 . a", p));
    CHECK(models[1].at("b") == must_eval("r1 . b", p));
}

TEST_CASE("constraints filter positive models") {
    Program p = must_parse("r1: a v b.\n:- a.\n");
    auto models = causal_stable_models_positive(p);
    REQUIRE(models.size() == 1);
    CHECK(models[0].true_atoms() == std::set<std::string>{"b"});
}

TEST_CASE("selection bound raises instead of truncating") {
    EngineLimits limits;
    limits.max_selections = 1;
    CHECK_THROWS_AS(causal_stable_models_positive(must_parse("r1: a v b.\n"), limits),
                    TooLargeError);
}

TEST_CASE("parallel selection evaluation is deterministic") {
    Program p = must_parse(
        "r1: a v b.\nr2: c v d.\nr3: e v f.\nr4: g v h.\nr5: x :- a, c.\n");
    EngineLimits serial, parallel;
    parallel.jobs = 4;
    CHECK(causal_stable_models_positive(p, serial) ==
          causal_stable_models_positive(p, parallel));
}

TEST_CASE("causal stable models of the coin program") {
    Program p = must_parse(kCoin);
    auto models = causal_stable_models(p);
    REQUIRE(models.size() == 2);
    CHECK(models[0].true_atoms() == std::set<std::string>{"harvey", "head"});
    CHECK(models[0].at("head") == must_eval("harvey . r3 . head", p));
    CHECK(models[1].at("dead") ==
          must_eval("harvey . r3 . tails . r2 . shoot . r1 . dead", p));
}

TEST_CASE("negation: defaults hold until defeated") {
    Program with_default = must_parse(kCoinDefault);
    auto models = causal_stable_models(with_default);
    REQUIRE(models.size() == 2);
    CHECK(models[1].at("dead") ==
          must_eval("harvey . r3 . tails . r2 . shoot . r1 . dead", with_default));

    Program defeated = must_parse(kCoinDefaultWet);
    auto wet_models = causal_stable_models(defeated);
    REQUIRE(wet_models.size() == 2);
    for (const Interpretation& m : wet_models) {
        CHECK(m.at("dead").is_zero());
        CHECK(m.at("ab") == must_eval("wet . r5 . ab", defeated));
    }
}

TEST_CASE("negative heads leave the atom underivable or forced") {
    Program free = must_parse(kFeverFree);
    CHECK(atom_sets(causal_stable_models(free)) ==
          std::set<std::set<std::string>>{{"infection"}, {"fever", "infection"}});
    Program forced = must_parse(kFeverForced);
    auto models = causal_stable_models(forced);
    REQUIRE(models.size() == 1);
    CHECK(models[0].at("fever") ==
          must_eval("infection . r1 . fever + r2 . fever", forced));
}

TEST_CASE("choice rules split on adoption of the alternative cause") {
    Program p = must_parse(kFeverChoice);
    auto models = causal_stable_models_choice(p);
    REQUIRE(models.size() == 2);
    CHECK(models[0].at("fever") == must_eval("r2 . fever", p));
    CHECK(models[1].at("fever") ==
          must_eval("infection . r1 . fever + r2 . fever", p));
    for (const Interpretation& m : models)
        CHECK(m.at("infection") == must_eval("infection", p));
}

TEST_CASE("choice bound raises instead of truncating") {
    EngineLimits limits;
    limits.max_choices = 0;
    CHECK_THROWS_AS(causal_stable_models_choice(must_parse(kFeverChoice), limits),
                    TooLargeError);
}

TEST_CASE("causal atom sets agree with standard stable models") {
    ProgramGen gen(4002);
    for (int i = 0; i < 100; ++i) {
        Program p = gen.random(5, 6, 2, true);
        CHECK(atom_sets(causal_stable_models(p)) == oracle_stable_models(p));
    }
}

TEST_CASE("choice programs agree with their rewriting") {
    ProgramGen gen(4003);
    for (int i = 0; i < 50; ++i) {
        Program p = gen.random(4, 3, 2, true, 1 + gen.pick(2));
        Program flat = p;
        while (true) {
            auto it = std::find_if(flat.rules.begin(), flat.rules.end(), [](const Rule& r) {
                return r.kind == RuleKind::CausalChoice;
            });
            if (it == flat.rules.end()) break;
            flat = rchoice_transform(flat, *it);
        }
        CHECK(atom_sets(causal_stable_models_choice(p)) == oracle_stable_models(flat));
    }
}

TEST_SUITE_END();

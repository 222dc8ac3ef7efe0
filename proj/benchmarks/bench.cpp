#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "caustic/algebra.hpp"
#include "caustic/engine.hpp"
#include "caustic/render.hpp"
#include "caustic/syntax.hpp"

using namespace caustic;

namespace {

CausalGraph random_graph(std::mt19937& rng, std::size_t labels, std::size_t edges) {
    std::uniform_int_distribution<std::size_t> pick(0, labels - 1);
    std::vector<Edge> raw;
    for (std::size_t i = 0; i < edges; ++i)
        raw.emplace_back(rule_label("l" + std::to_string(pick(rng))),
                         rule_label("l" + std::to_string(pick(rng))));
    return CausalGraph::from_edges(raw);
}

CausalValue random_value(std::mt19937& rng, std::size_t graphs) {
    std::vector<CausalGraph> gs;
    for (std::size_t i = 0; i < graphs; ++i) gs.push_back(random_graph(rng, 8, 6));
    return CausalValue::from_graphs(std::move(gs));
}

Program parse(const char* text) {
    ParseResult r = parse_program(text);
    return *r.program;
}

const char* kCoin =
    "r1: dead :- shoot.\n"
    "r2: shoot :- tails.\n"
    "r3: head v tails :- harvey.\n"
    "harvey.\n";

const char* kWideChain =
    "r1: a1 v b1.\nr2: a2 v b2.\nr3: a3 v b3.\nr4: a4 v b4.\n"
    "r5: c :- a1, a2.\nr6: d :- a3, a4.\nr7: e :- c, d.\n";

void BM_GraphClosure(benchmark::State& state) {
    std::mt19937 rng(7);
    std::vector<std::vector<Edge>> inputs;
    for (int i = 0; i < 64; ++i)
        inputs.push_back(random_graph(rng, 10, static_cast<std::size_t>(state.range(0))).edges());
    std::size_t n = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(CausalGraph::from_edges(inputs[n++ % inputs.size()]));
}
BENCHMARK(BM_GraphClosure)->Arg(8)->Arg(24);

void BM_ValueProduct(benchmark::State& state) {
    std::mt19937 rng(11);
    CausalValue v = random_value(rng, static_cast<std::size_t>(state.range(0)));
    CausalValue w = random_value(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(value_product(v, w));
}
BENCHMARK(BM_ValueProduct)->Arg(2)->Arg(6);

void BM_ValueApply(benchmark::State& state) {
    std::mt19937 rng(13);
    CausalValue v = random_value(rng, 4);
    CausalValue w = random_value(rng, 4);
    for (auto _ : state) benchmark::DoNotOptimize(value_apply(v, w));
}
BENCHMARK(BM_ValueApply);

void BM_FormatValue(benchmark::State& state) {
    std::mt19937 rng(17);
    CausalValue v = random_value(rng, 6);
    for (auto _ : state) benchmark::DoNotOptimize(format_value(v));
}
BENCHMARK(BM_FormatValue);

void BM_ParseProgram(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(parse_program(kWideChain));
}
BENCHMARK(BM_ParseProgram);

void BM_StandardModels(benchmark::State& state) {
    Program p = parse(kWideChain);
    for (auto _ : state) benchmark::DoNotOptimize(standard_stable_models(p));
}
BENCHMARK(BM_StandardModels);

void BM_CausalModelsCoin(benchmark::State& state) {
    Program p = parse(kCoin);
    for (auto _ : state) benchmark::DoNotOptimize(causal_stable_models(p));
}
BENCHMARK(BM_CausalModelsCoin);

void BM_CausalModelsWide(benchmark::State& state) {
    Program p = parse(kWideChain);
    EngineLimits limits;
    limits.jobs = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(causal_stable_models(p, limits));
}
BENCHMARK(BM_CausalModelsWide)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();

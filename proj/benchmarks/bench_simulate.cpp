#include <benchmark/benchmark.h>

#include "grosstm/compile.hpp"
#include "grosstm/machine_dsl.hpp"

#include <string>

using namespace grosstm;

namespace {

MultiTapeMachine load(const char* name) {
    return std::get<MultiTapeMachine>(
        parse_machine_file(std::string(GROSSTM_CORPUS_DIR) + "/" + name));
}

}  // namespace

static void BM_multi_run(benchmark::State& state) {
    MultiTapeMachine walker = load("walker2.tm");
    RunOptions options;
    options.record_trace = false;
    options.max_steps = static_cast<unsigned long long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(walker, {}, options));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_multi_run)->Range(64, 4096);

static void BM_compile(benchmark::State& state) {
    MultiTapeMachine pal2 = load("pal2.tm");
    for (auto _ : state) {
        benchmark::DoNotOptimize(compile(pal2));
    }
}
BENCHMARK(BM_compile);

// Compiled step growth over the simulated budget: the quadratic envelope in
// wall-clock form.
static void BM_compiled_steps(benchmark::State& state) {
    MultiTapeMachine walker = load("walker2.tm");
    CompiledMachine cm = compile(walker);
    unsigned long long t = static_cast<unsigned long long>(state.range(0));
    for (auto _ : state) {
        Accounting acc = simulate_and_account(cm, walker, {}, t);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(t));
}
BENCHMARK(BM_compiled_steps)->RangeMultiplier(4)->Range(16, 1024);

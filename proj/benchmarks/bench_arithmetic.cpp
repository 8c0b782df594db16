#include <benchmark/benchmark.h>

#include "grosstm/gross_number.hpp"
#include "grosstm/gross_parse.hpp"

#include <random>
#include <vector>

using namespace grosstm;

namespace {

std::vector<GrossNumber> sample_values() {
    std::vector<GrossNumber> out;
    for (const char* text : {"G/2", "2*G^2 + 2", "2^G - 1", "G^G + 1", "3 + 2*G^-1",
                             "6^G", "G^(1/2*G)", "2*G + 1"}) {
        out.push_back(parse_gross(text));
    }
    return out;
}

}  // namespace

static void BM_gross_mul(benchmark::State& state) {
    auto values = sample_values();
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(values[i % values.size()], values[(i + 3) % values.size()]));
        ++i;
    }
}
BENCHMARK(BM_gross_mul);

static void BM_gross_compare(benchmark::State& state) {
    auto values = sample_values();
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(compare(values[i % values.size()], values[(i + 1) % values.size()]));
        ++i;
    }
}
BENCHMARK(BM_gross_compare);

static void BM_parse_format(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(format_gross(parse_gross("2*G^2 + 2^G - 1/2*G^-1")));
    }
}
BENCHMARK(BM_parse_format);

#include "chromacode/char_graph.hpp"
#include "chromacode/codec.hpp"
#include "chromacode/coloring.hpp"
#include "chromacode/entropy.hpp"
#include "chromacode/or_product.hpp"
#include "chromacode/spectral.hpp"

#include <benchmark/benchmark.h>

using namespace chromacode;

static void BM_OrPower(benchmark::State& state) {
    const Graph c5 = make_cycle(5);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(or_power(c5, n));
    state.SetComplexityN(static_cast<benchmark::IterationCount>(checked_power(5, n, 1u << 20)));
}
BENCHMARK(BM_OrPower)->DenseRange(1, 5)->Complexity();

static void BM_ExactChromaticC5Square(benchmark::State& state) {
    const Graph g = or_power(make_cycle(5), 2);
    for (auto _ : state) benchmark::DoNotOptimize(exact_chromatic_number(g).chi);
}
BENCHMARK(BM_ExactChromaticC5Square)->Unit(benchmark::kMillisecond);

static void BM_PowerChromaticNumbers(benchmark::State& state) {
    const Graph g = make_cycle(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(power_chromatic_numbers(g, 3));
}
BENCHMARK(BM_PowerChromaticNumbers)->Arg(5)->Arg(7);

static void BM_JacobiSpectrum(benchmark::State& state) {
    const Graph g = or_power(make_cycle(static_cast<std::size_t>(state.range(0))), 2);
    for (auto _ : state) benchmark::DoNotOptimize(graph_spectrum(g));
}
BENCHMARK(BM_JacobiSpectrum)->Arg(4)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_ChromaticEntropyBruteForce(benchmark::State& state) {
    const Graph g = make_cycle(static_cast<std::size_t>(state.range(0)));
    const auto pmf = uniform_pmf(g.vertex_count());
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_entropy_bruteforce(g, pmf).bits);
}
BENCHMARK(BM_ChromaticEntropyBruteForce)->Arg(5)->Arg(7)->Arg(9);

static void BM_CodecSimulate(benchmark::State& state) {
    const auto plan = build_codec(example1_spec(), example1_pmf(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(simulate(plan, 10000, 1).lossless);
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_CodecSimulate)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

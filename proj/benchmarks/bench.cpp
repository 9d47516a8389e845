#include "liebasis/basis.hpp"

#include <benchmark/benchmark.h>

using namespace liebasis;

namespace {

void BM_LyndonWords(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lyndon_words(3, n));
}
BENCHMARK(BM_LyndonWords)->Arg(8)->Arg(10)->Arg(12);

void BM_BhatWords(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bhat_words(3, n));
}
BENCHMARK(BM_BhatWords)->Arg(6)->Arg(8);

void BM_PairDirect(benchmark::State& state) {
    const Alphabet a = Alphabet::parse("x,y,z");
    const Word w = parse_word(a, "xxyyzz");
    const Graph g = config_graph(a, w);
    const Tree t = config_bracketing(a, w);
    for (auto _ : state) benchmark::DoNotOptimize(pair(g, t));
}
BENCHMARK(BM_PairDirect);

void BM_PairRecursive(benchmark::State& state) {
    const Alphabet a = Alphabet::parse("x,y,z");
    const Word w = parse_word(a, "xxyyzz");
    const Graph g = config_graph(a, w);
    const Tree t = config_bracketing(a, w);
    for (auto _ : state) benchmark::DoNotOptimize(pair_recursive(g, t));
}
BENCHMARK(BM_PairRecursive);

void BM_PairingMatrix(benchmark::State& state) {
    const Alphabet a = Alphabet::parse("x,y,z");
    const MultiDegree md({2, 2, 2});
    const auto cols = family_columns(BasisFamily::generated(FamilyKind::ConfigB, a, md));
    for (auto _ : state)
        benchmark::DoNotOptimize(pairing_matrix(a, RowKind::BarLyndon, cols, md));
}
BENCHMARK(BM_PairingMatrix);

void BM_ExpandConfig(benchmark::State& state) {
    const Alphabet a = Alphabet::parse("x,y");
    const LieElement e(parse_tree("[[[[[[x,y],y],x],x],y],y]"));
    for (auto _ : state) benchmark::DoNotOptimize(expand_config(a, e));
}
BENCHMARK(BM_ExpandConfig);

}  // namespace

BENCHMARK_MAIN();

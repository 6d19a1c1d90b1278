#include <crideal/crideal.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace crideal;

namespace {

void BM_SigmaWordIdeal(benchmark::State& state) {
    NumericalSemigroup b({2, 3});
    std::mt19937_64 rng(1);
    const std::vector<std::int64_t> pool{0, 2, 3, 4, 5, 6, 7, 8};
    std::vector<Word<std::int64_t>> words;
    for (int n = 0; n < 256; ++n) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(state.range(0)));
        for (auto& x : e) x = pool[rng() % pool.size()];
        words.push_back(make_word(b, std::move(e)));
    }
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(ideal_of_word(b, words[k++ % words.size()]));
}
BENCHMARK(BM_SigmaWordIdeal)->Arg(2)->Arg(4)->Arg(8);

void BM_SigmaEnumeration(benchmark::State& state) {
    NumericalSemigroup b({2, 3});
    const std::vector<std::int64_t> pool{0, 2, 3, 4, 5, 6, 7, 8};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_word_ideals(b, pool, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SigmaEnumeration)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CoverSqrtMinus3(benchmark::State& state) {
    OrderMultMonoid b(std::make_shared<NumberRing>(preset_ring("Z[sqrt-3]")));
    const auto& r = b.ring();
    auto w = r.from_coordinates({Rat(0), Rat(1)});
    std::vector<Lattice> fam{r.order(), r.principal_order_ideal(w), r.principal_order_ideal(r.mul(w, w))};
    for (auto _ : state) benchmark::DoNotOptimize(cover_decide(b, r.maximal(), fam));
}
BENCHMARK(BM_CoverSqrtMinus3);

void BM_FreeFoundation(benchmark::State& state) {
    FreeMonoid f(2);
    std::vector<PrefixIdeal> fam{f.principal(f.parse("aa")), f.principal(f.parse("ab")), f.principal(f.parse("b"))};
    for (auto _ : state) benchmark::DoNotOptimize(is_foundation_set(f, f.whole(), fam));
}
BENCHMARK(BM_FreeFoundation);

void BM_DependenceReport(benchmark::State& state) {
    static const char* names[] = {"Z[sqrt-3]", "Z[2i]", "Z[cbrt19]"};
    auto r = std::make_shared<NumberRing>(preset_ring(names[state.range(0)]));
    for (auto _ : state) benchmark::DoNotOptimize(r->dependence_report());
    state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_DependenceReport)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_T4DefectNorm(benchmark::State& state) {
    GridMonoid g(2);
    std::vector<GridIdeal> fam;
    for (std::int64_t k = 0; k < state.range(0); ++k) fam.push_back(g.principal(GridVector{k + 1, state.range(0) - k}));
    for (auto _ : state) benchmark::DoNotOptimize(sup_norm(g, t4_defect(g, g.whole(), fam)));
}
BENCHMARK(BM_T4DefectNorm)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();

#include <string>

#include <benchmark/benchmark.h>

#include <mtrace/grothendieck.hpp>
#include <mtrace/pipeline.hpp>
#include <mtrace/tate.hpp>

using namespace mtrace;

namespace
{

// y^2 = x^3 + t^(6k+1): k redundant scalings before the II fiber shows up.
WeierstrassModel deep_curve(const char *spec, long k)
{
    const std::string a6 = "t^" + std::to_string(6 * k + 1);
    return WeierstrassModel::from_literals(LocalFieldSpec::parse(spec), "", "", "", "", a6);
}

void BM_TateDeepNonMinimal(benchmark::State &state)
{
    const auto w = deep_curve("laurent:Q", state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tate_algorithm(w));
    }
}
BENCHMARK(BM_TateDeepNonMinimal)->Arg(0)->Arg(2)->Arg(4);

void BM_TateWildF2(benchmark::State &state)
{
    const auto w = WeierstrassModel::from_literals(LocalFieldSpec::parse("laurent:F2"), "0", "t", "t^3", "0", "t^4");
    for (auto _ : state) {
        benchmark::DoNotOptimize(tate_algorithm(w));
    }
}
BENCHMARK(BM_TateWildF2);

void BM_TatePadic(benchmark::State &state)
{
    // 11a1 scaled by 5: non-minimal at 5.
    const auto w = WeierstrassModel::from_literals(LocalFieldSpec::parse("padic:5"), "0", "-5", "5^3", "-10*5^4",
                                                   "-20*5^6");
    for (auto _ : state) {
        benchmark::DoNotOptimize(tate_algorithm(w));
    }
}
BENCHMARK(BM_TatePadic);

void BM_BaseChangeSweep(benchmark::State &state)
{
    const auto w = deep_curve("laurent:Q", 0);
    for (auto _ : state) {
        for (int d = 1; d <= 12; ++d) {
            benchmark::DoNotOptimize(base_change_check(w, d));
        }
    }
}
BENCHMARK(BM_BaseChangeSweep);

void BM_GrothendieckProduct(benchmark::State &state)
{
    GrothElement a = GrothElement::parse("1 + L + Pn(2) + Gm + C(1)");
    GrothElement x = a;
    for (long i = 1; i < state.range(0); ++i) {
        x *= a;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(x * a);
    }
    state.counters["terms"] = static_cast<double>(x.terms().size());
}
BENCHMARK(BM_GrothendieckProduct)->Arg(2)->Arg(4)->Arg(6);

void BM_Corpus(benchmark::State &state)
{
    const std::string path = std::string(MTRACE_BENCH_DATA_DIR) + "/curves.txt";
    for (auto _ : state) {
        benchmark::DoNotOptimize(corpus_run_file(path, static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_Corpus)->Arg(1)->Arg(4);

} // namespace

BENCHMARK_MAIN();

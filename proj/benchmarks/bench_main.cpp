#include <benchmark/benchmark.h>

#include "schur/harness.hpp"
#include "schur/literals.hpp"
#include "schur/positivity.hpp"
#include "schur/tableaux.hpp"

using namespace schur;

namespace {

void BM_expand_nine_box(benchmark::State& state) {
    const SkewShape shape = parse_skew_shape("443/2");
    for (auto _ : state) benchmark::DoNotOptimize(lr_expand(shape));
}
BENCHMARK(BM_expand_nine_box);

void BM_expand_twelve_box(benchmark::State& state) {
    const SkewShape shape = parse_skew_shape("553111/31");
    for (auto _ : state) benchmark::DoNotOptimize(lr_expand(shape));
}
BENCHMARK(BM_expand_twelve_box);

void BM_enumerate_shapes(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_skew_shapes(n));
}
BENCHMARK(BM_enumerate_shapes)->Arg(6)->Arg(7)->Arg(8);

void BM_overlap_profile(benchmark::State& state) {
    const SkewShape shape = parse_skew_shape("553111/31");
    for (auto _ : state) benchmark::DoNotOptimize(overlap_profile(shape));
}
BENCHMARK(BM_overlap_profile);

void BM_screen_all_pairs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto shapes = enumerate_skew_shapes(n);
    std::vector<OverlapProfile> profiles;
    profiles.reserve(shapes.size());
    for (const SkewShape& shape : shapes) profiles.push_back(overlap_profile(shape));
    for (auto _ : state) {
        long long passes = 0;
        for (const OverlapProfile& a : profiles)
            for (const OverlapProfile& b : profiles) passes += overlap_screen(a, b).passed;
        benchmark::DoNotOptimize(passes);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<long long>(shapes.size() * shapes.size()));
}
BENCHMARK(BM_screen_all_pairs)->Arg(5)->Arg(6);

void BM_verify_all(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const VerificationReport r = verify_all(n);
        benchmark::DoNotOptimize(r.pair_count);
    }
}
BENCHMARK(BM_verify_all)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_product_tails(benchmark::State& state) {
    const Partition alpha = parse_partition("431");
    const Partition beta = parse_partition("22");
    const Partition gamma = parse_partition("3311");
    const Partition delta = parse_partition("21");
    for (auto _ : state)
        benchmark::DoNotOptimize(product_tails_check(alpha, beta, gamma, delta));
}
BENCHMARK(BM_product_tails);

} // namespace

BENCHMARK_MAIN();

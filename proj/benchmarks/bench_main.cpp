#include <random>

#include <benchmark/benchmark.h>

#include "advshare/advance.hpp"
#include "advshare/clifford.hpp"
#include "advshare/codefile.hpp"
#include "advshare/sim.hpp"

using namespace advshare;

namespace {

const char* kFiveQubit =
    "p=2 n=5\n"
    "1 0 0 1 0 | 0 1 1 0 0\n"
    "0 1 0 0 1 | 0 0 1 1 0\n"
    "1 0 1 0 0 | 0 0 0 1 1\n"
    "0 1 0 1 0 | 1 0 0 0 1\n";

FpMatrix random_matrix(int p, std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(0, p - 1);
    FpMatrix m(p, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, d(rng));
    return m;
}

void BM_Rref(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = random_matrix(3, n, 2 * n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(8, 64);

void BM_DualMinWeight(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto c = SymplecticCode::span(n, random_matrix(2, n - 1, 2 * n, 2));
    const auto dual = symplectic_dual(c);
    for (auto _ : state) benchmark::DoNotOptimize(min_symplectic_weight(dual));
}
BENCHMARK(BM_DualMinWeight)->DenseRange(4, 8, 2);

void BM_CodeDistanceFiveQubit(benchmark::State& state) {
    const auto code = load_stabilizer(kFiveQubit);
    for (auto _ : state) benchmark::DoNotOptimize(code_distance(code));
}
BENCHMARK(BM_CodeDistanceFiveQubit);

void BM_EnumerateShareable(benchmark::State& state) {
    const auto code = load_stabilizer(kFiveQubit);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_advance_shareable(code, 2));
}
BENCHMARK(BM_EnumerateShareable);

void BM_BuildScheme(benchmark::State& state) {
    const auto code = load_stabilizer(kFiveQubit);
    for (auto _ : state) benchmark::DoNotOptimize(build_scheme(code, {4}));
}
BENCHMARK(BM_BuildScheme);

void BM_Encode(benchmark::State& state) {
    const auto scheme = build_scheme(load_stabilizer(kFiveQubit), {4});
    Rng rng(3);
    const auto secret = random_state(2, 1, rng);
    for (auto _ : state) benchmark::DoNotOptimize(encode_advance(scheme, secret));
}
BENCHMARK(BM_Encode);

void BM_EntropicAudit(benchmark::State& state) {
    const auto scheme = build_scheme(load_stabilizer(kFiveQubit), {4});
    for (auto _ : state) benchmark::DoNotOptimize(entropic_audit(scheme, {0, 1, 2}));
}
BENCHMARK(BM_EntropicAudit);

}  // namespace
BENCHMARK_MAIN();

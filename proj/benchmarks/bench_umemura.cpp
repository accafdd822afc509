#include <benchmark/benchmark.h>

#include "umemura/analysis.hpp"
#include "umemura/recurrences.hpp"
#include "umemura/wronskian.hpp"

namespace {

using namespace umemura;

void BM_BiPolyMul(benchmark::State& state) {
    PolySequence s = generate_umemura_s((int)state.range(0), MuMode::sym());
    const BiPoly& top = s.at((int)state.range(0));
    for (auto _ : state) {
        BiPoly prod = top * top;
        benchmark::DoNotOptimize(prod);
    }
}
BENCHMARK(BM_BiPolyMul)->Arg(4)->Arg(6)->Arg(8);

void BM_UmemuraStep(benchmark::State& state) {
    int n = (int)state.range(0);
    PolySequence s = generate_umemura_s(n, MuMode::sym());
    BiPoly mu = BiPoly::mu();
    for (auto _ : state) {
        BiPoly next = umemura_s_next(s.at(n), s.at(n - 1), mu);
        benchmark::DoNotOptimize(next);
    }
}
BENCHMARK(BM_UmemuraStep)->Arg(4)->Arg(6)->Arg(8);

void BM_Discriminant(benchmark::State& state) {
    int n = (int)state.range(0);
    PolySequence s = generate_umemura_s(n, MuMode::sym());
    for (auto _ : state) {
        BiPoly dis = discriminant_z(s.at(n));
        benchmark::DoNotOptimize(dis);
    }
}
BENCHMARK(BM_Discriminant)->Arg(3)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_TauWronskian(benchmark::State& state) {
    int n = (int)state.range(0);
    for (auto _ : state) {
        BiPoly tau = tau_n(n);
        benchmark::DoNotOptimize(tau);
    }
}
BENCHMARK(BM_TauWronskian)->Arg(3)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_AberthRoots(benchmark::State& state) {
    int n = (int)state.range(0);
    PolySequence s = generate_umemura_s(n, MuMode::at(Rational(6)));
    const BiPoly& p = s.at(n);
    for (auto _ : state) {
        ComplexRootSet roots = aberth_roots(p);
        benchmark::DoNotOptimize(roots);
    }
}
BENCHMARK(BM_AberthRoots)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}

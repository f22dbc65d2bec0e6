#include <benchmark/benchmark.h>

#include "tamerep/char_orbits.hpp"
#include "tamerep/modcheck.hpp"
#include "tamerep/rep_builder.hpp"
#include "tamerep/tame_galois.hpp"
#include "tamerep/twisted_group.hpp"

using namespace tamerep;

namespace {

void BM_phi_orbits(benchmark::State& state) {
    TwistedGroup G = make_group(2, 1, state.range(0), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(phi_orbits(G));
}
BENCHMARK(BM_phi_orbits)->Args({3, 2})->Args({31, 5})->Args({17, 8});

void BM_build_pi(benchmark::State& state) {
    TwistedGroup G = make_group(2, 1, state.range(0), state.range(1));
    auto orbits = phi_orbits(G);
    // largest-degree orbit in the group
    const PhiOrbit* big = &orbits.front();
    for (const auto& O : orbits)
        if (O.degree > big->degree && O.degree <= 12) big = &O;
    for (auto _ : state) benchmark::DoNotOptimize(build_pi(G, *big));
}
BENCHMARK(BM_build_pi)->Args({3, 2})->Args({5, 4})->Args({17, 8})->Unit(benchmark::kMillisecond);

void BM_is_irreducible(benchmark::State& state) {
    TwistedGroup G = make_group(2, 1, state.range(0), state.range(1));
    auto orbits = phi_orbits(G);
    const PhiOrbit* big = &orbits.front();
    for (const auto& O : orbits)
        if (O.degree > big->degree && O.degree <= 12) big = &O;
    MatrixRep pi = build_pi(G, *big);
    for (auto _ : state) benchmark::DoNotOptimize(modcheck::is_irreducible(pi));
}
BENCHMARK(BM_is_irreducible)->Args({3, 2})->Args({5, 4})->Args({17, 8})->Unit(benchmark::kMillisecond);

void BM_submodule_census(benchmark::State& state) {
    TwistedGroup G = make_group(2, 1, 3, 2);
    MatrixRep pi;
    for (const auto& O : phi_orbits(G))
        if (O.degree == 2) pi = build_pi(G, O);
    for (auto _ : state)
        benchmark::DoNotOptimize(modcheck::submodule_census(pi, state.range(0)));
}
BENCHMARK(BM_submodule_census)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_classify_galois(benchmark::State& state) {
    PFieldParams K{2, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_galois_reps(K, state.range(0)));
}
BENCHMARK(BM_classify_galois)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

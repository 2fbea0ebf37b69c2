#include <benchmark/benchmark.h>

#include "dp8/dyadic.hpp"
#include "dp8/piclattice.hpp"
#include "dp8/qform.hpp"

using namespace dp8;

namespace {

const QuadraticForm kConic = diagonal_form({1, 1, -3});
const QuadraticForm kQuaternary = diagonal_form({1, 1, 1, 1});

GaloisLattice dplink4_lattice() {
    return blow_up_orbit(quadric_lattice({{{0, 1}, {1, 0}}, identity_matrix(2)}), 4, {{2, 3, 0, 1}, {1, 0, 3, 2}});
}

void BM_PointSearchRank3Serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(oracle_point_search_serial(kConic, state.range(0)));
}

void BM_PointSearchRank3Parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(oracle_point_search(kConic, state.range(0)));
}

void BM_PointSearchRank4Serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(oracle_point_search_serial(kQuaternary, state.range(0)));
}

void BM_PointSearchRank4Parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(oracle_point_search(kQuaternary, state.range(0)));
}

void BM_NegOneSerial(benchmark::State& state) {
    const GaloisLattice z = dplink4_lattice();
    for (auto _ : state) benchmark::DoNotOptimize(neg_one_classes_serial(z, static_cast<int>(state.range(0))));
}

void BM_NegOneParallel(benchmark::State& state) {
    const GaloisLattice z = dplink4_lattice();
    for (auto _ : state) benchmark::DoNotOptimize(neg_one_classes(z, static_cast<int>(state.range(0))));
}

void BM_DyadicSerial(benchmark::State& state) {
    const QuadField k(Integer(-1));
    const Field l = Field::quadratic(k);
    const detail::DyadicResidueRing ring(k);
    const Scalar a(l, 3, 2), b(l, -1, 4);
    for (auto _ : state) benchmark::DoNotOptimize(detail::dyadic_hilbert_serial(ring, a, b));
}

void BM_DyadicParallel(benchmark::State& state) {
    const QuadField k(Integer(-1));
    const Field l = Field::quadratic(k);
    const detail::DyadicResidueRing ring(k);
    const Scalar a(l, 3, 2), b(l, -1, 4);
    for (auto _ : state) benchmark::DoNotOptimize(detail::dyadic_hilbert_parallel(ring, a, b));
}

}  // namespace

BENCHMARK(BM_PointSearchRank3Serial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointSearchRank3Parallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointSearchRank4Serial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointSearchRank4Parallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NegOneSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NegOneParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DyadicSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DyadicParallel)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

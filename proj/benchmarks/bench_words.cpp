#include <benchmark/benchmark.h>

#include "cremona/words.hpp"

using namespace cremona;

namespace {

void BM_NoRelationCertificateSL2(benchmark::State& state) {
    IntMatrix t(2), s(2);
    t.at(0, 0) = 1; t.at(0, 1) = 2;  t.at(1, 0) = 0;  t.at(1, 1) = 1;
    s.at(0, 0) = 1; s.at(0, 1) = 0;  s.at(1, 0) = -2; s.at(1, 1) = 1;
    const int radius = static_cast<int>(state.range(0));
    for (auto _ : state) {
        bool ok = no_relation_certificate(t, s, radius);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_NoRelationCertificateSL2)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_NoRelationCertificateSquares(benchmark::State& state) {
    auto [m1, m2] = a1_a2_matrices(4);
    const IntMatrix a = m1 * m1;
    const IntMatrix b = m2 * m2;
    const int radius = static_cast<int>(state.range(0));
    for (auto _ : state) {
        bool ok = no_relation_certificate(a, b, radius);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_NoRelationCertificateSquares)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_DiagOrbitClassify(benchmark::State& state) {
    const DiagonalSpec spec({2, 3, 5, 7});
    const int radius = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto verdict = diag_orbit_classify(spec, radius);
        benchmark::DoNotOptimize(verdict);
    }
}
BENCHMARK(BM_DiagOrbitClassify)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();

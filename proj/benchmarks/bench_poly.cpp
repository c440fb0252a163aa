#include <benchmark/benchmark.h>

#include <random>

#include "cremona/families.hpp"
#include "cremona/polynomial.hpp"

using namespace cremona;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int n, int degree, int terms) {
    Polynomial p(n);
    for (int t = 0; t < terms; ++t) {
        ExponentVec e(n + 1, 0);
        int budget = degree;
        for (int i = 0; i <= n; ++i) {
            std::uniform_int_distribution<int> d(0, budget);
            e[i] = d(rng);
            budget -= e[i];
        }
        std::uniform_int_distribution<int> c(-9, 9);
        p.add_term(e, Rational(c(rng)));
    }
    return p;
}

void BM_PolyMultiply(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const int terms = static_cast<int>(state.range(0));
    const Polynomial a = random_poly(rng, 4, 8, terms);
    const Polynomial b = random_poly(rng, 4, 8, terms);
    for (auto _ : state) {
        Polynomial c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_PolyMultiply)->Arg(10)->Arg(40)->Arg(120);

void BM_GcdPlantedFactor(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const Polynomial g = random_poly(rng, 3, 3, 4);
    const Polynomial a = random_poly(rng, 3, 4, 6);
    const Polynomial b = random_poly(rng, 3, 4, 6);
    const Polynomial ga = g * a;
    const Polynomial gb = g * b;
    for (auto _ : state) {
        Polynomial c = multivariate_gcd(ga, gb);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_GcdPlantedFactor);

void BM_ShearConjugationNormalized(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const auto shear = shear_lambda(default_shear(4, d)).lambda;
    auto [m1, m2] = a1_a2_matrices(4);
    const auto a2 = monomial_map(m2);
    const auto a2_inv = monomial_map(m2.inverse_unimodular());
    for (auto _ : state) {
        ProjectiveMap conj = compose(compose(a2, shear, true), a2_inv, true);
        benchmark::DoNotOptimize(conj);
    }
}
BENCHMARK(BM_ShearConjugationNormalized)->Arg(2)->Arg(3);

void BM_SigmaCompose(benchmark::State& state) {
    const int n = 5;
    std::vector<Polynomial> comps;
    for (int k = 1; k <= n - 1; ++k) {
        Polynomial c = Polynomial::variable(n - 1, k);
        if (k < n - 1) {
            ExponentVec e(n, 0);
            e[k + 1] = 2;
            c.add_term(e, Rational(1));
        }
        comps.push_back(std::move(c));
    }
    const auto sigma = sigma_map(AffinePolyMap(n - 1, std::move(comps)), 3);
    for (auto _ : state) {
        ProjectiveMap sq = compose(sigma, sigma, true);
        benchmark::DoNotOptimize(sq);
    }
}
BENCHMARK(BM_SigmaCompose);

}  // namespace

BENCHMARK_MAIN();

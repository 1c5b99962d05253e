#include "ccdet/detector.hpp"
#include "ccdet/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace ccdet;

namespace {

MultiVector sample_vector(int n, int q, unsigned seed) {
  auto corpus = positive_corpus(n, q, Variance::Contravariant, 1, seed);
  return std::get<MultiVector>(corpus[0].obj);
}

void bm_poly_mul(benchmark::State& state) {
  const int n = 4;
  Poly a(n), b(n);
  for (unsigned i = 0; i < 6; ++i) {
    Exponents e(n, 0);
    e[i % n] = i;
    a.add_term(e, Rational(i + 1, 3));
    e[(i + 1) % n] = 2;
    b.add_term(e, Rational(7, i + 2));
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_poly_mul);

void bm_schouten(benchmark::State& state) {
  MultiVector A = sample_vector(4, 2, 7);
  MultiVector B = sample_vector(4, 2, 11);
  for (auto _ : state) benchmark::DoNotOptimize(schouten_bracket(A, B));
}
BENCHMARK(bm_schouten);

void bm_rank_analysis(benchmark::State& state) {
  auto corpus = positive_corpus(4, 2, Variance::Covariant, 1, 5);
  GammaSystem sys = assemble_system(std::get<DiffForm>(corpus[0].obj));
  auto pts = sample_points(4, 5, 3, 10);
  for (auto _ : state) benchmark::DoNotOptimize(rank_analysis(sys, pts));
}
BENCHMARK(bm_rank_analysis);

} // namespace

BENCHMARK_MAIN();

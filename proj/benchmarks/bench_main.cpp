#include <benchmark/benchmark.h>

#include "torsionlab/spectrum.hpp"
#include "torsionlab/torsion.hpp"

namespace {

using namespace torsionlab;

void bench_torsion_sl3(benchmark::State& state) {
  GroupSpec g = make_sl3();
  Weight w = make_weight(g, {Rational(3), Rational(1)});
  for (auto _ : state) benchmark::DoNotOptimize(l2_torsion(g, w));
}
BENCHMARK(bench_torsion_sl3);

void bench_torsion_so75(benchmark::State& state) {
  GroupSpec g = make_so(7, 5);
  Weight w = make_weight(g, std::vector<Rational>(static_cast<size_t>(g.rank), Rational(2)));
  for (auto _ : state) benchmark::DoNotOptimize(l2_torsion(g, w));
}
BENCHMARK(bench_torsion_so75);

void bench_torsion_so97(benchmark::State& state) {
  GroupSpec g = make_so(9, 7);
  Weight w = make_weight(g, std::vector<Rational>(static_cast<size_t>(g.rank), Rational(1)));
  for (auto _ : state) benchmark::DoNotOptimize(l2_torsion(g, w));
}
BENCHMARK(bench_torsion_so97);

void bench_weyl_dim(benchmark::State& state) {
  GroupSpec g = make_so(9, 7);
  Weight w = make_weight(g, std::vector<Rational>(static_cast<size_t>(g.rank), Rational(2)));
  for (auto _ : state) benchmark::DoNotOptimize(weyl_dim_poly(g, w));
}
BENCHMARK(bench_weyl_dim);

void bench_interpolation(benchmark::State& state) {
  std::vector<Rational> lambdas;
  for (int k = 7; k >= 1; --k) lambdas.emplace_back(Rational(3 * k + 1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(pi_and_q(lambdas));
}
BENCHMARK(bench_interpolation);

void bench_spectral_gap(benchmark::State& state) {
  GroupSpec g = make_sl3();
  Weight w = make_weight(g, {Rational(2), Rational(1)});
  for (auto _ : state) benchmark::DoNotOptimize(spectral_gap(g, w, 12, 2));
}
BENCHMARK(bench_spectral_gap);

}  // namespace

BENCHMARK_MAIN();

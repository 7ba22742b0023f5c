#include <benchmark/benchmark.h>

#include <random>

#include "rieszkit/construction.hpp"
#include "rieszkit/kernels.hpp"
#include "rieszkit/squarefree.hpp"

using namespace rieszkit;

namespace {

std::vector<double> integer_freqs(int K) {
  std::vector<double> f;
  for (int k = -K; k <= K; ++k) f.push_back(k);
  return f;
}

template <void (*Fill)(const std::vector<double>&, const IntervalSet&, CMatrix&)>
void BM_gram_fill(benchmark::State& state) {
  const auto freqs = integer_freqs(static_cast<int>(state.range(0)));
  const auto S = build_S(1.0, 0.5, 10);
  CMatrix G(freqs.size(), freqs.size());
  for (auto _ : state) {
    Fill(freqs, S, G);
    benchmark::DoNotOptimize(G.data());
  }
}

template <double (*Form)(const CMatrix&, const std::vector<cplx>&)>
void BM_quadratic_form(benchmark::State& state) {
  const auto freqs = integer_freqs(static_cast<int>(state.range(0)));
  CMatrix G(freqs.size(), freqs.size());
  serial::gram_fill(freqs, build_S(1.0, 0.5, 6), G);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<cplx> c(freqs.size());
  for (auto& v : c) v = cplx(g(rng), g(rng));
  for (auto _ : state) benchmark::DoNotOptimize(Form(G, c));
}

template <std::vector<std::uint8_t> (*Sample)(const IntervalSet&, double, double, std::size_t)>
void BM_sample_indicator(benchmark::State& state) {
  const auto S = build_S(1.0, 0.5, 12);
  for (auto _ : state) benchmark::DoNotOptimize(Sample(S, -0.5, 0.5, static_cast<std::size_t>(state.range(0))));
}

template <CountExtremes (*Count)(const std::vector<double>&, double, double, double, double)>
void BM_window_counts(benchmark::State& state) {
  std::vector<double> pts;
  for (auto v : squarefree_symmetric(state.range(0))) pts.push_back(static_cast<double>(v));
  const double half = 0.9 * static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Count(pts, -half, half, 4096, 0.5));
}

template <std::vector<std::uint8_t> (*Sieve)(std::int64_t)>
void BM_squarefree_sieve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Sieve(state.range(0)));
}

}  // namespace

BENCHMARK(BM_gram_fill<serial::gram_fill>)->Name("gram_fill/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_gram_fill<omp::gram_fill>)->Name("gram_fill/omp")->Arg(64)->Arg(256);
BENCHMARK(BM_quadratic_form<serial::quadratic_form>)->Name("quadratic_form/serial")->Arg(256)->Arg(1024);
BENCHMARK(BM_quadratic_form<omp::quadratic_form>)->Name("quadratic_form/omp")->Arg(256)->Arg(1024);
BENCHMARK(BM_sample_indicator<serial::sample_indicator>)->Name("sample_indicator/serial")->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_sample_indicator<omp::sample_indicator>)->Name("sample_indicator/omp")->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_window_counts<serial::window_count_extremes>)->Name("window_counts/serial")->Arg(100000)->Arg(1000000);
BENCHMARK(BM_window_counts<omp::window_count_extremes>)->Name("window_counts/omp")->Arg(100000)->Arg(1000000);
BENCHMARK(BM_squarefree_sieve<serial::squarefree_sieve>)->Name("squarefree_sieve/serial")->Arg(1000000)->Arg(10000000);
BENCHMARK(BM_squarefree_sieve<omp::squarefree_sieve>)->Name("squarefree_sieve/omp")->Arg(1000000)->Arg(10000000);

BENCHMARK_MAIN();

// Serial vs OpenMP Gauss-Jordan on random dense matrices.

#include <benchmark/benchmark.h>

#include <random>

#include "gcdim/matrix.hpp"

using namespace gcdim;

namespace {

Matrix random_matrix(const Field& f, std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, f.from_int(d(rng)));
  return m;
}

template <void (*Kernel)(Matrix&, std::vector<std::size_t>&)>
void run(benchmark::State& state, const Field& f) {
  const Matrix m = random_matrix(f, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    Matrix work = m;
    std::vector<std::size_t> pivots;
    Kernel(work, pivots);
    benchmark::DoNotOptimize(pivots.data());
  }
}

void serial_fp(benchmark::State& s) { run<kernels::rref_serial>(s, Field::prime(1000003)); }
void parallel_fp(benchmark::State& s) { run<kernels::rref_parallel>(s, Field::prime(1000003)); }
void serial_q(benchmark::State& s) { run<kernels::rref_serial>(s, Field::rationals()); }
void parallel_q(benchmark::State& s) { run<kernels::rref_parallel>(s, Field::rationals()); }

}  // namespace

BENCHMARK(serial_fp)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel_fp)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(serial_q)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel_q)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

// Batched Groebner engine (serial and OpenMP) against textbook Buchberger.
#include <benchmark/benchmark.h>

#include <random>

#include "gcdim/groebner.hpp"

using namespace gcdim;

namespace {

// n random homogeneous polynomials of degree `deg` in `nvars` variables,
// roughly half the monomials present.
std::vector<Vec> random_ideal(const PolyAlgebra& A, int n, int deg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vec> gens;
  for (int g = 0; g < n; ++g) {
    std::vector<VTerm> terms;
    for (const auto& m : A.monomials_of_degree(deg))
      if (rng() % 2) terms.push_back(VTerm{0, m, Fp(static_cast<std::uint32_t>(1 + rng() % 100))});
    gens.push_back(vec_make(A, terms));
  }
  return gens;
}

const PolyAlgebra& algebra(int nvars) {
  static const PolyAlgebra a3(PrimeField(101), {"x", "y", "z"}, MonomialOrder::Grevlex);
  static const PolyAlgebra a4(PrimeField(101), {"x", "y", "z", "w"}, MonomialOrder::Grevlex);
  return nvars == 3 ? a3 : a4;
}

void BM_Reference(benchmark::State& st) {
  const auto& A = algebra(static_cast<int>(st.range(0)));
  auto gens = random_ideal(A, static_cast<int>(st.range(1)), 3, 7);
  for (auto _ : st) benchmark::DoNotOptimize(groebner_basis_reference(A, {0}, gens));
}

void BM_BatchedSerial(benchmark::State& st) {
  const auto& A = algebra(static_cast<int>(st.range(0)));
  auto gens = random_ideal(A, static_cast<int>(st.range(1)), 3, 7);
  for (auto _ : st) benchmark::DoNotOptimize(groebner_basis(A, {0}, gens, Exec::Serial));
}

void BM_BatchedParallel(benchmark::State& st) {
  const auto& A = algebra(static_cast<int>(st.range(0)));
  auto gens = random_ideal(A, static_cast<int>(st.range(1)), 3, 7);
  for (auto _ : st) benchmark::DoNotOptimize(groebner_basis(A, {0}, gens, Exec::Parallel));
}

// {variables, generators}
#define GB_ARGS ->Args({3, 3})->Args({3, 5})->Args({4, 4})->Args({4, 6})->Unit(benchmark::kMillisecond)

BENCHMARK(BM_Reference) GB_ARGS;
BENCHMARK(BM_BatchedSerial) GB_ARGS;
BENCHMARK(BM_BatchedParallel) GB_ARGS;

}  // namespace

BENCHMARK_MAIN();

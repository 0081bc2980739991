#include <benchmark/benchmark.h>

#include <random>

#include "schinzel/bezout.hpp"
#include "schinzel/coprime.hpp"
#include "schinzel/factor.hpp"
#include "schinzel/hilbert.hpp"
#include "schinzel/int_matrix.hpp"
#include "schinzel/poly_gcd.hpp"

using namespace schinzel;

namespace {

Poly zpoly(std::initializer_list<long> asc) {
  std::vector<Value> coeffs;
  for (long c : asc) coeffs.push_back(Value::of_integer(Ring::integers(), Integer(c)));
  return Poly::from_coeffs(Ring::integers(), "y", std::move(coeffs));
}

void BM_BezoutDelta(benchmark::State& state) {
  std::vector<Poly> ps{zpoly({3, -2, 0, 5, 1}), zpoly({-7, 4, 9, 1})};
  for (auto _ : state) {
    benchmark::DoNotOptimize(bezout_delta(ps));
  }
}
BENCHMARK(BM_BezoutDelta);

void BM_Resultant(benchmark::State& state) {
  Poly p = zpoly({3, -2, 0, 5, 1});
  Poly q = zpoly({-7, 4, 9, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(resultant(p, q));
  }
}
BENCHMARK(BM_Resultant);

void BM_KroneckerFactor(benchmark::State& state) {
  Poly p = zpoly({2, -2, 1}) * zpoly({2, 2, 1}) * zpoly({-3, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(kronecker_factor(p));
  }
}
BENCHMARK(BM_KroneckerFactor);

void BM_FactorOverF2(benchmark::State& state) {
  RingPtr f2 = Ring::prime_field(Integer(2));
  // u^3 * (u+1) * (u^4+u^3+u^2+u+1)
  std::vector<Value> coeffs;
  for (long c : {0L, 0L, 0L, 1L, 0L, 0L, 0L, 0L, 1L}) {
    coeffs.push_back(Value::of_integer(f2, Integer(c)));
  }
  Poly p = Poly::from_coeffs(f2, "u", std::move(coeffs));
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor_over_prime_field(p));
  }
}
BENCHMARK(BM_FactorOverF2);

void BM_HermiteNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-50, 50);
  IntMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) m.at(i, j) = Integer(dist(rng));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermite_normal_form(m));
  }
}
BENCHMARK(BM_HermiteNormalForm);

void BM_FindCoprimePid(benchmark::State& state) {
  std::vector<Poly> ps{zpoly({0, 1}), zpoly({30, 1})};
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_coprime_pid(ps));
  }
}
BENCHMARK(BM_FindCoprimePid);

void BM_GoldbachMod(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(goldbach_mod_n(Integer(40), Integer(12), 1));
  }
}
BENCHMARK(BM_GoldbachMod);

}  // namespace

BENCHMARK_MAIN();

#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "schinzel/errors.hpp"
#include "schinzel/factor.hpp"
#include "schinzel/poly_gcd.hpp"

using namespace schinzel;
using namespace schinzel::testing;

namespace {

Poly fp_poly(long p, std::initializer_list<long> asc, const char* var = "u") {
  RingPtr f = Ring::prime_field(Integer(p));
  std::vector<Value> coeffs;
  for (long c : asc) coeffs.push_back(Value::of_integer(f, Integer(c)));
  return Poly::from_coeffs(f, var, std::move(coeffs));
}

// every emitted factor survives exhaustive trial division up to half its
// degree (independent re-check, plain loops)
bool fp_factor_is_irreducible(const Poly& f) {
  const RingPtr& field = f.coeff_ring();
  long p = field->prime().to_long();
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    std::vector<long> digits(static_cast<std::size_t>(d), 0);
    bool more = true;
    while (more) {
      std::vector<Value> coeffs;
      for (long dd : digits) coeffs.push_back(Value::of_integer(field, Integer(dd)));
      coeffs.push_back(Value::one(field));
      Poly cand = Poly::from_coeffs(field, f.var(), std::move(coeffs));
      if (poly_divides(cand, f)) return false;
      int i = 0;
      for (; i < d; ++i) {
        if (++digits[static_cast<std::size_t>(i)] < p) break;
        digits[static_cast<std::size_t>(i)] = 0;
      }
      more = i < d;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("factor_over_prime_field examples") {
  // u^3 + 1 = (u+1)(u^2+u+1) over F_2
  Factorization f = factor_over_prime_field(fp_poly(2, {1, 0, 0, 1}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.unit.is_one());
  CHECK(f.factors[0].first == fp_poly(2, {1, 1}));
  CHECK(f.factors[0].second == 1);
  CHECK(f.factors[1].first == fp_poly(2, {1, 1, 1}));
  CHECK(f.factors[1].second == 1);

  // u is irreducible
  f = factor_over_prime_field(fp_poly(2, {0, 1}));
  CHECK(f.is_irreducible());

  // u^8 + u^3 = u^3 (u+1) (u^4+u^3+u^2+u+1) over F_2
  Poly swan_val = fp_poly(2, {0, 0, 0, 1, 0, 0, 0, 0, 1});
  f = factor_over_prime_field(swan_val);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0].first == fp_poly(2, {0, 1}));
  CHECK(f.factors[0].second == 3);
  CHECK(f.factors[1].first == fp_poly(2, {1, 1}));
  CHECK(f.factors[1].second == 1);
  CHECK(f.factors[2].first == fp_poly(2, {1, 1, 1, 1, 1}));
  CHECK(f.factors[2].second == 1);
}

TEST_CASE("factor_over_prime_field reconstructs and emits irreducibles") {
  std::mt19937_64 rng(808);
  for (long p : {2L, 3L, 5L}) {
    RingPtr field = Ring::prime_field(Integer(p));
    std::uniform_int_distribution<long> coef(0, p - 1);
    std::uniform_int_distribution<int> deg_dist(1, 7);
    int done = 0;
    while (done < 40) {
      int d = deg_dist(rng);
      std::vector<Value> coeffs;
      for (int i = 0; i < d; ++i) coeffs.push_back(Value::of_integer(field, Integer(coef(rng))));
      coeffs.push_back(Value::of_integer(field, Integer(1 + coef(rng) % (p - 1 > 0 ? p - 1 : 1))));
      Poly poly = Poly::from_coeffs(field, "u", std::move(coeffs));
      if (poly.is_zero()) continue;
      ++done;
      Factorization f = factor_over_prime_field(poly);
      CHECK(f.reconstruct("u") == poly);
      for (const auto& [factor, mult] : f.factors) {
        CHECK(factor.lead().is_one());
        CHECK(fp_factor_is_irreducible(factor));
      }
    }
  }
}

TEST_CASE("kronecker_factor examples") {
  Factorization f = kronecker_factor(zp({-1, 0, 1}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.unit.is_one());
  CHECK(f.factors[0].first == zp({-1, 1}));
  CHECK(f.factors[1].first == zp({1, 1}));

  CHECK(kronecker_factor(zp({1, 0, 1})).is_irreducible());

  // y^4 + 4 = (y^2-2y+2)(y^2+2y+2)
  f = kronecker_factor(zp({4, 0, 0, 0, 1}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == zp({2, -2, 1}));
  CHECK(f.factors[1].first == zp({2, 2, 1}));
}

TEST_CASE("kronecker_factor handles content, sign and multiplicity") {
  Factorization f = kronecker_factor(zp({-6, 0, 6}));  // 6(y-1)(y+1)
  CHECK(f.unit == zi(6));
  REQUIRE(f.factors.size() == 2);

  f = kronecker_factor(zp({0, -1}));  // -y
  CHECK(f.unit == zi(-1));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first == zp({0, 1}));

  // (y-1)^2 (y+2)
  Poly p = zp({-1, 1}) * zp({-1, 1}) * zp({2, 1});
  f = kronecker_factor(p);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == zp({-1, 1}));
  CHECK(f.factors[0].second == 2);
  CHECK(f.factors[1].first == zp({2, 1}));
  CHECK(f.reconstruct("y") == p);
}

TEST_CASE("kronecker_factor respects the degree cap") {
  std::vector<Value> coeffs(10, zi(1));
  Poly big = Poly::from_coeffs(Ring::integers(), "y", std::move(coeffs));
  CHECK_THROWS_AS(kronecker_factor(big), BudgetExceeded);
}

TEST_CASE("kronecker_factor against the exhaustive oracle") {
  std::mt19937_64 rng(600673);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::uniform_int_distribution<int> deg_dist(1, 3);
  int done = 0;
  while (done < 40) {
    auto rand_factor = [&]() {
      int d = deg_dist(rng);
      std::vector<Value> coeffs;
      for (int i = 0; i < d; ++i) coeffs.push_back(zi(coef(rng)));
      coeffs.push_back(zi(1));
      return Poly::from_coeffs(Ring::integers(), "y", std::move(coeffs));
    };
    Poly p = rand_factor() * rand_factor();
    if (p.degree() > 6) continue;
    ++done;
    Factorization f = kronecker_factor(p);
    CHECK(f.reconstruct("y") == p);
    for (const auto& [factor, mult] : f.factors) {
      CHECK(content_and_primitive(factor).content.is_one());
      CHECK(oracle::irreducible_primitive_z(factor));
    }
  }
}

TEST_CASE("is_irreducible_over_z") {
  CHECK(is_irreducible_over_z(zp({7})));
  CHECK_FALSE(is_irreducible_over_z(zp({6})));
  CHECK_FALSE(is_irreducible_over_z(zp({1})));
  CHECK_FALSE(is_irreducible_over_z(zp({})));
  CHECK(is_irreducible_over_z(zp({1, 0, 1})));
  CHECK_FALSE(is_irreducible_over_z(zp({2, 2})));  // content 2
  CHECK(is_irreducible_over_z(zp({2, 1})));
  CHECK_FALSE(is_irreducible_over_z(zp({0, 0, 1})));  // y^2
}

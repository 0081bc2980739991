#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "schinzel/bezout.hpp"
#include "schinzel/errors.hpp"
#include "schinzel/poly_gcd.hpp"
#include "schinzel/profile.hpp"

using namespace schinzel;
using namespace schinzel::testing;

TEST_CASE("gcd_profile examples") {
  GcdProfile p = gcd_profile({zp({0, 1}), zp({2, 1})});
  CHECK(p.delta == zi(2));
  REQUIRE(p.table.size() == 2);
  CHECK(p.table[0].second == zi(2));
  CHECK(p.table[1].second == zi(1));

  p = gcd_profile({zp({1, 0, 1}), zp({0, 1})});
  CHECK(p.delta == zi(1));
  REQUIRE(p.table.size() == 1);
  CHECK(p.table[0].second == zi(1));

  p = gcd_profile({zp({0, 1}), zp({6, 1})});
  CHECK(p.delta == zi(6));
  REQUIRE(p.table.size() == 6);
  long expected[] = {6, 1, 2, 3, 2, 1};
  for (std::size_t i = 0; i < 6; ++i) CHECK(p.table[i].second == zi(expected[i]));
}

TEST_CASE("gcd_profile over F_2[u]") {
  RingPtr r = fpu(2);
  GcdProfile p = gcd_profile({nested(r, {{0, 1}, {1}}), nested(r, {{}, {1}})});  // y+u, y
  CHECK(p.delta == pv(r, {0, 1}));
  REQUIRE(p.table.size() == 2);  // residues mod u: 0 and 1
  // m=0: gcd(u, 0) = u; m=1: gcd(1+u, 1) = 1
  CHECK(p.table[0].second == pv(r, {0, 1}));
  CHECK(p.table[1].second == pv(r, {1}));
}

TEST_CASE("dstar examples") {
  DStar d = dstar({zp({0, 1}), zp({2, 1})});
  REQUIRE(d.divisors.size() == 2);
  CHECK(d.divisors[0] == zi(1));
  CHECK(d.divisors[1] == zi(2));
  CHECK(d.d_star == zi(1));
  CHECK(d.av2_holds);

  d = dstar({zp({0, 1}), zp({6, 1})});
  REQUIRE(d.divisors.size() == 4);
  CHECK(d.d_star == zi(1));
  CHECK(d.av2_holds);

  d = dstar({zp({2, -1, 1}), zp({0, -1, 1})});
  CHECK(d.d_star == zi(2));
  CHECK_FALSE(d.av2_holds);
}

TEST_CASE("density examples") {
  CHECK(density_good_m({zp({0, 1}), zp({2, 1})}, Integer(0), Integer(10)) ==
        Rational(Integer(1), Integer(2)));
  CHECK(density_good_m({zp({0, 1}), zp({30, 1})}, Integer(0), Integer(30)) ==
        Rational(Integer(4), Integer(15)));
  CHECK(density_good_m({zp({1, 0, 1}), zp({0, 1})}, Integer(0), Integer(7)) == Rational(1));
  CHECK_THROWS_AS(density_good_m({zp({0, 1}), zp({2, 1})}, Integer(0), Integer(7)),
                  PreconditionError);
}

TEST_CASE("periodicity on random PID instances") {
  std::mt19937_64 rng(1221);
  std::uniform_int_distribution<int> deg_dist(1, 4);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<long> sample(-50, 50);
  auto rand_poly = [&]() {
    int d = deg_dist(rng);
    std::vector<Value> coeffs;
    for (int i = 0; i <= d; ++i) coeffs.push_back(zi(coef(rng)));
    return Poly::from_coeffs(Ring::integers(), "y", std::move(coeffs));
  };
  int done = 0;
  while (done < 20) {
    Poly p = rand_poly(), q = rand_poly();
    if (p.is_zero() || q.is_zero()) continue;
    Poly g = poly_gcd(p.convert_coeffs(Ring::rationals()), q.convert_coeffs(Ring::rationals()));
    if (g.degree() >= 1) continue;
    std::vector<Poly> ps{p, q};
    if (bezout_delta(ps).delta.as_integer().abs() > Integer(50000)) continue;
    GcdProfile profile = gcd_profile(ps);
    ++done;
    for (int s = 0; s < 20; ++s) {
      Integer m(sample(rng));
      Value dm = Value::gcd(p.eval(Value::of_integer(Ring::integers(), m)),
                            q.eval(Value::of_integer(Ring::integers(), m)))
                     .normalized();
      for (long l = -2; l <= 2; ++l) {
        Integer shifted = m + Integer(l) * profile.delta.as_integer();
        Value ds = Value::gcd(p.eval(Value::of_integer(Ring::integers(), shifted)),
                              q.eval(Value::of_integer(Ring::integers(), shifted)))
                       .normalized();
        CHECK(dm == ds);
      }
    }
  }
}

#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "schinzel/bezout.hpp"
#include "schinzel/errors.hpp"
#include "schinzel/poly_gcd.hpp"

using namespace schinzel;
using namespace schinzel::testing;

TEST_CASE("bezout_delta small cases over Z") {
  // (y+2) - y = 2
  BezoutCertificate c = bezout_delta({zp({0, 1}), zp({2, 1})});
  CHECK(c.delta == zi(2));
  REQUIRE(c.cofactors.size() == 2);
  CHECK(c.cofactors[0] == zp({-1}));
  CHECK(c.cofactors[1] == zp({1}));
  CHECK(verify_certificate(c, {zp({0, 1}), zp({2, 1})}));

  // 1*(y^2+1) - y*y = 1
  c = bezout_delta({zp({1, 0, 1}), zp({0, 1})});
  CHECK(c.delta == zi(1));
  CHECK(c.cofactors[0] == zp({1}));
  CHECK(c.cofactors[1] == zp({0, -1}));

  CHECK_THROWS_AS(bezout_delta({zp({0, 1}), zp({0, 2})}), CommonFactorError);
  CHECK_THROWS_AS(bezout_delta({zp({0, 1})}), PreconditionError);
  CHECK_THROWS_AS(bezout_delta({zp({0, 1}), zp({})}), PreconditionError);
}

TEST_CASE("bezout_delta over F_p[u] and with three inputs") {
  RingPtr r = fpu(2);
  BezoutCertificate c = bezout_delta({nested(r, {{0, 1}, {1}}), nested(r, {{}, {1}})});
  CHECK(c.delta == pv(r, {0, 1}));  // delta = u, monic
  CHECK(verify_certificate(c, {nested(r, {{0, 1}, {1}}), nested(r, {{}, {1}})}));

  // the two-term fold gives delta = 2 here; the lattice step recovers the
  // true generator 1 (achievable as (y+3) - (y+2))
  BezoutCertificate c3 = bezout_delta({zp({0, 1}), zp({2, 1}), zp({3, 1})});
  CHECK(verify_certificate(c3, {zp({0, 1}), zp({2, 1}), zp({3, 1})}));
  CHECK(c3.delta == zi(2));
  CHECK(minimal_delta_bounded({zp({0, 1}), zp({2, 1}), zp({3, 1})}, 1) == zi(1));
}

TEST_CASE("verify_certificate rejects tampering") {
  std::vector<Poly> ps{zp({0, 1}), zp({2, 1})};
  BezoutCertificate c = bezout_delta(ps);
  CHECK(verify_certificate(c, ps));

  BezoutCertificate bad = c;
  bad.delta = zi(3);
  CHECK_FALSE(verify_certificate(bad, ps));

  BezoutCertificate swapped = c;
  std::swap(swapped.cofactors[0], swapped.cofactors[1]);
  CHECK_FALSE(verify_certificate(swapped, ps));
}

TEST_CASE("minimal_delta_bounded examples") {
  CHECK(minimal_delta_bounded({zp({0, 1}), zp({2, 1})}, 1) == zi(2));
  CHECK(minimal_delta_bounded({zp({1, 0, 1}), zp({0, 1})}, 2) == zi(1));
  // (3y, 3y+6): achievable constants at D=0 are 6Z
  CHECK(minimal_delta_bounded({zp({0, 3}), zp({6, 3})}, 0) == zi(6));
  CHECK_THROWS_AS(minimal_delta_bounded({zp({0, 1}), zp({0, 2})}, 1), CommonFactorError);
}

TEST_CASE("minimal_delta_bounded over F_2[u]") {
  RingPtr r = fpu(2);
  std::vector<Poly> ps{nested(r, {{}, {1}}), nested(r, {{0, 1}, {1}})};  // y, y+u
  Value d = minimal_delta_bounded(ps, 1);
  CHECK(d == pv(r, {0, 1}));  // the ideal of achievable constants is (u)
}

TEST_CASE("delta lattice properties on random pairs") {
  std::mt19937_64 rng(90210);
  std::uniform_int_distribution<int> deg_dist(1, 4);
  std::uniform_int_distribution<long> coef(-9, 9);
  auto rand_poly = [&]() {
    int d = deg_dist(rng);
    std::vector<Value> coeffs;
    for (int i = 0; i <= d; ++i) coeffs.push_back(zi(coef(rng)));
    return Poly::from_coeffs(Ring::integers(), "y", std::move(coeffs));
  };
  int done = 0;
  while (done < 30) {
    Poly p = rand_poly(), q = rand_poly();
    if (p.is_zero() || q.is_zero()) continue;
    Poly g = poly_gcd(p.convert_coeffs(Ring::rationals()), q.convert_coeffs(Ring::rationals()));
    if (g.degree() >= 1) continue;
    ++done;
    std::vector<Poly> ps{p, q};
    DeltaResult res = delta_analysis(ps);
    REQUIRE(res.minimal_delta.has_value());
    // minimal delta divides the certificate delta
    CHECK(Value::divides(*res.minimal_delta, res.bezout.delta));
    // divisibility chain as the bound grows
    Value prev = minimal_delta_bounded(ps, 0);
    for (int d = 1; d <= res.degree_bound_used; ++d) {
      Value cur = minimal_delta_bounded(ps, d);
      if (!prev.is_zero()) {
        CHECK(!cur.is_zero());
        CHECK(Value::divides(cur, prev));
      }
      prev = cur;
    }
    // delta_D divides the resultant once the bound covers the cofactors
    CHECK(Value::divides(*res.minimal_delta, resultant(p, q)));
    // sampled m: gcd of values divides delta
    for (long m = -6; m <= 6; ++m) {
      Value vm = Value::gcd(p.eval(zi(m)), q.eval(zi(m)));
      CHECK(Value::divides(vm, res.bezout.delta));
    }
  }
}

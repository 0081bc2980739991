#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "schinzel/errors.hpp"
#include "schinzel/numtheory.hpp"

using namespace schinzel;

TEST_CASE("ext_gcd conventions and small cases") {
  ExtGcdResult e = ext_gcd(Integer(0), Integer(0));
  CHECK(e.g == Integer(0));
  CHECK(e.x == Integer(0));
  CHECK(e.y == Integer(0));

  e = ext_gcd(Integer(6), Integer(4));
  CHECK(e.g == Integer(2));
  CHECK(Integer(6) * e.x + Integer(4) * e.y == Integer(2));

  e = ext_gcd(Integer(240), Integer(46));
  CHECK(e.g == Integer(2));
  CHECK(Integer(240) * e.x + Integer(46) * e.y == Integer(2));
}

TEST_CASE("ext_gcd identity holds on random 64-bit inputs") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long long> dist(-1'000'000'000'000LL, 1'000'000'000'000LL);
  for (int i = 0; i < 10'000; ++i) {
    Integer a(static_cast<long>(dist(rng)));
    Integer b(static_cast<long>(dist(rng)));
    ExtGcdResult e = ext_gcd(a, b);
    CHECK(a * e.x + b * e.y == e.g);
    CHECK(e.g == Integer::gcd(a, b));
    CHECK(e.g.sign() >= 0);
  }
}

TEST_CASE("crt small cases") {
  CrtResult r = crt({{Integer(1), Integer(2)}, {Integer(2), Integer(3)}});
  CHECK(r.value == Integer(5));
  CHECK(r.lcm == Integer(6));

  r = crt({{Integer(0), Integer(5)}});
  CHECK(r.value == Integer(0));
  CHECK(r.lcm == Integer(5));

  CHECK_THROWS_AS(crt({{Integer(1), Integer(4)}, {Integer(3), Integer(4)}}),
                  IncompatibleCongruences);
  CHECK_THROWS_AS(crt({{Integer(1), Integer(0)}}), PreconditionError);
}

TEST_CASE("crt output reduces back to every input congruence") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> mod_dist(1, 300);
  std::uniform_int_distribution<long> x_dist(-100000, 100000);
  for (int trial = 0; trial < 500; ++trial) {
    long x = x_dist(rng);
    std::vector<Congruence> cs;
    for (int i = 0; i < 4; ++i) {
      Integer n(mod_dist(rng));
      cs.push_back({Integer::mod_floor(Integer(x), n), n});
    }
    CrtResult r = crt(cs);
    for (const Congruence& c : cs) {
      CHECK(Integer::mod_floor(r.value, c.modulus) == c.residue);
    }
    CHECK(r.value.sign() >= 0);
    CHECK(r.value < r.lcm);
  }
}

TEST_CASE("is_prime basics") {
  CHECK(is_prime(Integer(2)));
  CHECK_FALSE(is_prime(Integer(1)));
  CHECK_FALSE(is_prime(Integer(0)));
  CHECK(is_prime(Integer(-7)));
  // 561 = 3 * 11 * 17 is the smallest Carmichael number
  CHECK_FALSE(is_prime(Integer(561)));
  CHECK(Integer::divides(Integer(3), Integer(561)));
  // a couple of large ones
  CHECK(is_prime(Integer(1000003)));
  CHECK(*Integer::parse("2305843009213693951") ==
        Integer::pow(Integer(2), 61) - Integer(1));
  CHECK(is_prime(*Integer::parse("2305843009213693951")));  // Mersenne 2^61-1
  CHECK_FALSE(is_prime(Integer::pow(Integer(2), 67) - Integer(1)));
}

TEST_CASE("is_prime agrees with a sieve up to 10^6") {
  const long limit = 1'000'000;
  std::vector<bool> sieve = oracle::prime_sieve(limit);
  for (long n = 0; n <= limit; ++n) {
    if (is_prime(Integer(n)) != sieve[static_cast<std::size_t>(n)]) {
      CAPTURE(n);
      CHECK(false);
    }
  }
  CHECK(true);
}

TEST_CASE("factorize small cases") {
  FactoredInteger f = factorize(Integer(12));
  CHECK(f.unit == 1);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == Integer(2));
  CHECK(f.factors[0].second == 2);
  CHECK(f.factors[1].first == Integer(3));
  CHECK(f.factors[1].second == 1);

  f = factorize(Integer(-1));
  CHECK(f.unit == -1);
  CHECK(f.factors.empty());

  f = factorize(Integer(1000003));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first == Integer(1000003));
  CHECK(f.factors[0].second == 1);

  CHECK_THROWS_AS(factorize(Integer(0)), PreconditionError);
}

TEST_CASE("factorize reconstructs and certifies on random inputs") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> dist(2, 4'000'000'000'000LL);
  for (int i = 0; i < 60; ++i) {
    long long raw = dist(rng);
    Integer n(static_cast<long>(i % 2 ? raw : -raw));
    FactoredInteger f = factorize(n);
    CHECK(f.reconstruct() == n);
    Integer prev(1);
    for (const auto& [p, e] : f.factors) {
      CHECK(is_prime(p));
      CHECK(p > prev);
      CHECK(e >= 1);
      prev = p;
    }
  }
}

TEST_CASE("divisors enumeration") {
  std::vector<Integer> d = divisors(factorize(Integer(12)));
  std::vector<Integer> expected{Integer(1), Integer(2), Integer(3),
                                Integer(4), Integer(6), Integer(12)};
  CHECK(d == expected);
}

TEST_CASE("prime_in_progression") {
  CHECK(prime_in_progression(Integer(1), Integer(4), Integer(2)) == Integer(5));
  // scan 14..23 by hand: 23 is the first prime = 3 (mod 10) at or above 14
  CHECK(prime_in_progression(Integer(3), Integer(10), Integer(14)) == Integer(23));
  CHECK_THROWS_AS(prime_in_progression(Integer(2), Integer(4), Integer(2)), PreconditionError);
  CHECK(prime_in_progression(Integer(0), Integer(1), Integer(0)) == Integer(2));
}

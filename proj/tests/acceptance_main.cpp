// Acceptance suite: one criterion per run_criterion call, each printing a
// single PASS/FAIL line with its runtime against the pinned limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "oracles.hpp"
#include "schinzel/av.hpp"
#include "schinzel/bezout.hpp"
#include "schinzel/coprime.hpp"
#include "schinzel/errors.hpp"
#include "schinzel/factor.hpp"
#include "schinzel/hilbert.hpp"
#include "schinzel/numtheory.hpp"
#include "schinzel/poly_gcd.hpp"
#include "schinzel/profile.hpp"
#include "schinzel/residues.hpp"

using namespace schinzel;
using namespace schinzel::testing;

namespace {

int g_failures = 0;

void run_criterion(int number, const char* label, double limit_seconds,
                   const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" [exception: ") + e.what() + "]";
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = seconds < limit_seconds;
  if (!(ok && in_time)) ++g_failures;
  std::printf("%s criterion %2d: %s (%.2f s, limit %.0f s)%s\n",
              ok && in_time ? "PASS" : "FAIL", number, label, seconds, limit_seconds,
              note.c_str());
  std::fflush(stdout);
}

Poly random_zpoly(std::mt19937_64& rng, int max_deg, long height) {
  std::uniform_int_distribution<int> deg_dist(1, max_deg);
  std::uniform_int_distribution<long> coef(-height, height);
  int d = deg_dist(rng);
  std::vector<Value> coeffs;
  for (int i = 0; i <= d; ++i) coeffs.push_back(zi(coef(rng)));
  return Poly::from_coeffs(Ring::integers(), "y", std::move(coeffs));
}

bool coprime_over_q(const Poly& p, const Poly& q) {
  return poly_gcd(p.convert_coeffs(Ring::rationals()), q.convert_coeffs(Ring::rationals()))
             .degree() == 0;
}

// --- criterion 1: paper fixture suite ------------------------------------

bool criterion_fixtures() {
  // (y, y+2): delta, profile, D*, witness parity
  std::vector<Poly> twin{zp({0, 1}), zp({2, 1})};
  if (bezout_delta(twin).delta != zi(2)) return false;
  GcdProfile profile = gcd_profile(twin);
  if (profile.table.size() != 2 || profile.table[0].second != zi(2) ||
      profile.table[1].second != zi(1)) {
    return false;
  }
  DStar ds = dstar(twin);
  if (ds.divisors != std::vector<Value>{zi(1), zi(2)} || ds.d_star != zi(1)) return false;
  CoprimeWitness w = find_coprime_pid(twin);
  if (!w.verification.coprime || w.m.as_integer().is_even()) return false;

  // Remark 1.4 family over Z: AV2 fails at 2, no witness in [-1000, 1000]
  std::vector<Poly> even{zp({2, -1, 1}), zp({0, -1, 1})};
  AvVerdict v = check_av2(even);
  if (v.holds || !v.failing_prime || *v.failing_prime != zi(2)) return false;
  if (brute_force_coprime(even, SearchBox::interval(Integer(-1000), Integer(1000)))) return false;

  // Remark 1.4 family over F_2[u]: AV2 fails at u
  RingPtr r = fpu(2);
  Poly p1 = nested(r, {{0, 1}, {1}, {1}});
  Poly yy = nested(r, {{}, {1}, {1}});
  Poly p2 = yy * yy + nested(r, {{0, 1}});
  AvVerdict vf = check_av2({p1, p2});
  if (vf.holds || !vf.failing_prime || *vf.failing_prime != pv(r, {0, 1})) return false;

  // Swan: every m(u) with deg <= 4 makes m(u)^8 + u^3 reducible; exact,
  // zero exceptions over all 32 candidates
  Value u3 = pv(r, {0, 0, 0, 1});
  long candidates = 0;
  for (const Value& m : enumerate_fp_polys(r, 4)) {
    ++candidates;
    Factorization f = factor_over_prime_field((m.pow(8) + u3).as_poly());
    if (f.is_irreducible()) return false;
  }
  return candidates == 32;
}

// --- criterion 2: constructive vs oracle ---------------------------------

bool criterion_constructive_oracle() {
  std::mt19937_64 rng(20260810);
  int done = 0;
  while (done < 200) {
    Poly p = random_zpoly(rng, 4, 9);
    Poly q = random_zpoly(rng, 4, 9);
    if (p.is_zero() || q.is_zero() || !coprime_over_q(p, q)) continue;
    std::vector<Poly> ps{p, q};
    if (!check_av2(ps).holds) continue;
    ++done;
    CoprimeWitness w = find_coprime_pid(ps);
    if (!w.verification.coprime) return false;
  }
  return true;
}

// --- criterion 3: periodicity ---------------------------------------------

bool criterion_periodicity() {
  std::mt19937_64 rng(333);
  std::uniform_int_distribution<long> sample(-1000, 1000);
  const RingPtr z = Ring::integers();
  int done = 0;
  while (done < 100) {
    Poly p = random_zpoly(rng, 4, 9);
    Poly q = random_zpoly(rng, 4, 9);
    if (p.is_zero() || q.is_zero() || !coprime_over_q(p, q)) continue;
    ++done;
    Integer delta = bezout_delta({p, q}).delta.as_integer();
    for (int s = 0; s < 20; ++s) {
      Integer m(sample(rng));
      auto norm_gcd = [&](const Integer& at) {
        return Value::gcd(p.eval(Value::of_integer(z, at)), q.eval(Value::of_integer(z, at)))
            .normalized();
      };
      Value dm = norm_gcd(m);
      for (long l = -2; l <= 2; ++l) {
        if (dm != norm_gcd(m + Integer(l) * delta)) return false;
      }
    }
  }
  return true;
}

// --- criterion 4: delta lattice -------------------------------------------

bool criterion_delta_lattice() {
  std::mt19937_64 rng(444);
  int done = 0;
  while (done < 50) {
    Poly p = random_zpoly(rng, 4, 9);
    Poly q = random_zpoly(rng, 4, 9);
    if (p.is_zero() || q.is_zero() || !coprime_over_q(p, q)) continue;
    ++done;
    std::vector<Poly> ps{p, q};
    DeltaResult res = delta_analysis(ps);
    if (!res.minimal_delta) return false;
    const Value& dD = *res.minimal_delta;
    if (dD.is_zero() || !Value::divides(dD, res.bezout.delta)) return false;
    Value d_next = minimal_delta_bounded(ps, res.degree_bound_used + 1);
    if (!Value::divides(d_next, dD)) return false;
    if (!Value::divides(dD, resultant(p, q))) return false;
  }
  return true;
}

// --- criterion 5: density -------------------------------------------------

bool criterion_density() {
  return density_good_m({zp({0, 1}), zp({30, 1})}, Integer(0), Integer(300)) ==
         Rational(Integer(4), Integer(15));
}

// --- criterion 6: hilbert first stage --------------------------------------

bool criterion_hilbert() {
  // t*y + (t+2): progression (2, 1); all 401 specializations primitive
  Poly p = nested(zt(), {{2, 1}, {0, 1}});
  ProgressionWitness w = primitivity_progression({p});
  if (w.a0 != Integer(2) || w.b0 != Integer(1)) return false;
  const RingPtr z = Ring::integers();
  for (long k = -200; k <= 200; ++k) {
    Poly s = specialize_at(p, Value::of_integer(z, w.b0 + w.a0 * Integer(k)));
    Integer content(0);
    for (const Value& c : s.coeffs()) content = Integer::gcd(content, c.as_integer());
    if (!content.is_unit()) return false;
  }
  // y^2 + t: at least 20 irreducible specializations with scan cap 100
  Poly p2 = nested(zt(), {{0, 1}, {}, {1}});
  ProgressionWitness w2 = primitivity_progression({p2});
  SpecializationReport rep = irreducible_specializations({p2}, w2, 20, 100);
  return rep.hits.size() >= 20;
}

// --- criterion 7: goldbach mod N -------------------------------------------

bool criterion_goldbach() {
  for (long n = 2; n <= 20; ++n) {
    for (long two_n = 4; two_n <= 40; two_n += 2) {
      std::vector<GoldbachWitness> ws = goldbach_mod_n(Integer(two_n), Integer(n), 1);
      if (ws.size() != 1) return false;
      const GoldbachWitness& g = ws[0];
      if (!is_prime(g.p) || !is_prime(g.q)) return false;
      if (Integer::divides(g.p, Integer(n)) || Integer::divides(g.q, Integer(n))) return false;
      if (!Integer::mod_floor(g.p + g.q - Integer(two_n), Integer(n)).is_zero()) return false;
    }
  }
  return true;
}

// --- criterion 8: polynomial-ring witnesses --------------------------------

bool criterion_polyring() {
  std::mt19937_64 rng(888);
  RingPtr r = zu();
  std::uniform_int_distribution<int> ydeg(1, 2);
  std::uniform_int_distribution<int> udeg(0, 2);
  std::uniform_int_distribution<long> coef(-5, 5);
  auto rand_poly = [&]() {
    int d = ydeg(rng);
    std::vector<Value> coeffs;
    for (int i = 0; i <= d; ++i) {
      int du = udeg(rng);
      std::vector<Value> uc;
      for (int j = 0; j <= du; ++j) uc.push_back(zi(coef(rng)));
      coeffs.push_back(Value::of_poly(r, Poly::from_coeffs(Ring::integers(), "u",
                                                           std::move(uc))));
    }
    return Poly::from_coeffs(r, "y", std::move(coeffs));
  };
  int done = 0;
  while (done < 50) {
    Poly p = rand_poly();
    Poly q = rand_poly();
    if (p.is_zero() || q.is_zero()) continue;
    if (poly_gcd(p, q).degree() > 0) continue;  // common divisor over Q(u)[y]
    Value cg = Value::zero(r);
    for (const Poly* poly : {&p, &q}) {
      for (const Value& c : poly->coeffs()) cg = Value::gcd(cg, c);
    }
    if (!cg.is_unit()) continue;  // common prime divisor in Z[u]
    ++done;
    CoprimeWitness w = find_coprime_polyring({p, q});
    if (!w.verification.coprime) return false;
  }
  return true;
}

// --- criterion 9: specialized-value nondivisibility ------------------------

bool criterion_value_nondivisibility() {
  std::mt19937_64 rng(999);
  RingPtr r = zu();
  std::uniform_int_distribution<int> ydeg(1, 3);
  std::uniform_int_distribution<int> udeg(0, 2);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<int> which_p(0, 2);
  std::uniform_int_distribution<long> kdist(-4, 4);
  const long primes[] = {2, 3, 5};

  int done = 0;
  while (done < 200) {
    long prime = primes[which_p(rng)];
    // P in Z[u][y] with some coefficient outside (p)
    int d = ydeg(rng);
    std::vector<Value> coeffs;
    int max_u = 0;
    for (int i = 0; i <= d; ++i) {
      int du = udeg(rng);
      std::vector<Value> uc;
      for (int j = 0; j <= du; ++j) uc.push_back(zi(coef(rng)));
      Value c = Value::of_poly(r, Poly::from_coeffs(Ring::integers(), "u", std::move(uc)));
      if (!c.is_zero()) max_u = std::max(max_u, c.as_poly().degree());
      coeffs.push_back(std::move(c));
    }
    Poly p = Poly::from_coeffs(r, "y", std::move(coeffs));
    if (p.is_zero()) continue;
    RingPtr fpu_ring = Ring::poly_ring(Ring::prime_field(Integer(prime)), "u");
    if (p.convert_coeffs(fpu_ring).is_zero()) continue;  // P = 0 mod p

    // m(u): two monomials of degree > deg_u(P) with mu2 = 1 (mod mu1),
    // plus an arbitrary low tail
    long mu1 = 0;
    while (mu1 == 0) mu1 = coef(rng);
    long mu2 = 0;
    while (mu2 == 0) mu2 = 1 + kdist(rng) * mu1;
    int a = max_u + 1 + (rng() % 3);
    int b = a + 1 + static_cast<int>(rng() % 2);
    std::vector<Value> mc(static_cast<std::size_t>(b) + 1, Value::zero(Ring::integers()));
    for (int j = 0; j <= max_u; ++j) mc[static_cast<std::size_t>(j)] = zi(coef(rng));
    mc[static_cast<std::size_t>(a)] = zi(mu1);
    mc[static_cast<std::size_t>(b)] = zi(mu2);
    Value m = Value::of_poly(r, Poly::from_coeffs(Ring::integers(), "u", std::move(mc)));

    ++done;
    Value value = p.eval(m);
    if (Value::convert(value, fpu_ring).is_zero()) return false;  // divisible by p
  }
  return true;
}

// --- criterion 10: kronecker correctness -----------------------------------

bool criterion_kronecker() {
  std::mt19937_64 rng(101010);
  std::uniform_int_distribution<int> deg_dist(1, 3);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::uniform_int_distribution<int> count_dist(2, 3);
  auto random_irreducible = [&]() {
    while (true) {
      int d = deg_dist(rng);
      std::vector<Value> coeffs;
      for (int i = 0; i < d; ++i) coeffs.push_back(zi(coef(rng)));
      coeffs.push_back(zi(1));
      Poly cand = Poly::from_coeffs(Ring::integers(), "y", std::move(coeffs));
      if (content_and_primitive(cand).content.is_one() &&
          oracle::irreducible_primitive_z(cand)) {
        return cand;
      }
    }
  };
  int done = 0;
  while (done < 100) {
    int n = count_dist(rng);
    Poly product = Poly::constant(Ring::integers(), "y", zi(1));
    for (int i = 0; i < n; ++i) product = product * random_irreducible();
    if (product.degree() > 6) continue;
    ++done;
    Factorization f = kronecker_factor(product);
    if (f.reconstruct("y") != product) return false;
    for (const auto& [factor, mult] : f.factors) {
      if (!content_and_primitive(factor).content.is_one()) return false;
      if (!oracle::irreducible_primitive_z(factor)) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  run_criterion(1, "paper fixture suite (delta/profile/D*/AV2/Swan)", 5.0, criterion_fixtures);
  run_criterion(2, "200 random constructive witnesses vs oracle", 30.0,
                criterion_constructive_oracle);
  run_criterion(3, "gcd periodicity on 100 random instances", 20.0, criterion_periodicity);
  run_criterion(4, "delta lattice divisibility on 50 random pairs", 30.0,
                criterion_delta_lattice);
  run_criterion(5, "density of (y, y+30) over [0, 300) is 4/15", 1.0, criterion_density);
  run_criterion(6, "hilbert primitivity progression and specializations", 10.0,
                criterion_hilbert);
  run_criterion(7, "goldbach mod N for N in 2..20, 2n in 4..40", 15.0, criterion_goldbach);
  run_criterion(8, "50 verified polynomial-ring witnesses", 60.0, criterion_polyring);
  run_criterion(9, "structured substitutions dodge a chosen prime, 200 instances", 10.0,
                criterion_value_nondivisibility);
  run_criterion(10, "kronecker factorization against exhaustive search", 60.0,
                criterion_kronecker);
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", g_failures);
  }
  return g_failures;
}

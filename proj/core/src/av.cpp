#include "schinzel/av.hpp"

#include <functional>

#include "schinzel/bezout.hpp"
#include "schinzel/errors.hpp"
#include "schinzel/factor.hpp"
#include "schinzel/numtheory.hpp"
#include "schinzel/poly_gcd.hpp"
#include "schinzel/residues.hpp"

namespace schinzel {

namespace {

enum class RingCase { Z, FpU, ZU, QU };

RingCase classify(const RingPtr& ring) {
  if (ring->kind() == RingKind::Integers) return RingCase::Z;
  if (ring->kind() == RingKind::PolyRing) {
    switch (ring->base()->kind()) {
      case RingKind::PrimeField: return RingCase::FpU;
      case RingKind::Integers: return RingCase::ZU;
      case RingKind::Rationals: return RingCase::QU;
      default: break;
    }
  }
  throw RingMismatchError("assumption-on-values checks support Z, F_p[u], Z[u], Q[u]; got " +
                          ring->describe());
}

// Core of scan_prime: inputs already reduced into the residue ring; a
// residue annihilating all of them is a common root of the nonzero ones,
// so the scan is complete after min_deg + 1 candidates (or the whole ring
// if smaller).
ResidueScanRecord scan_reduced(const std::vector<Poly>& reduced, const RingPtr& residue_ring,
                               ResidueScanRecord rec,
                               const std::function<Value(const Value&)>& lift) {
  bool all_zero = true;
  long min_deg = -1;
  for (const Poly& r : reduced) {
    if (r.is_zero()) continue;
    all_zero = false;
    if (min_deg < 0 || r.degree() < min_deg) min_deg = r.degree();
  }
  if (all_zero) {
    rec.all_residues_annihilate = true;
    return rec;
  }
  for (const Value& residue :
       first_residues(residue_ring, static_cast<unsigned long>(min_deg) + 1)) {
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (!reduced[i].eval(residue).is_zero()) {
        rec.surviving_residue = lift(residue);
        rec.surviving_index = i;
        return rec;
      }
    }
  }
  rec.all_residues_annihilate = true;
  return rec;
}

}  // namespace

ResidueScanRecord scan_prime(const std::vector<Poly>& ps, const Value& prime) {
  ResidueScanRecord rec;
  rec.prime = prime;
  const RingPtr& ring = ps.front().coeff_ring();
  std::vector<Poly> reduced;
  reduced.reserve(ps.size());
  if (prime.ring()->kind() == RingKind::Integers) {
    RingPtr fp = Ring::prime_field(prime.as_integer());
    for (const Poly& p : ps) reduced.push_back(p.convert_coeffs(fp));
    return scan_reduced(reduced, fp, std::move(rec), [&](const Value& r) {
      return Value::of_integer(Ring::integers(), r.as_integer());
    });
  }
  RingPtr quot = Ring::quotient(ring, prime.as_poly());
  for (const Poly& p : ps) reduced.push_back(p.convert_coeffs(quot));
  return scan_reduced(reduced, quot, std::move(rec), [&](const Value& r) {
    return Value::of_poly(ring, r.as_poly());
  });
}

namespace {

// gcd of every coefficient of every input (an element of the coefficient
// ring); a non-unit is exactly a common-prime-divisor witness under the
// residue property.
Value coefficient_gcd(const std::vector<Poly>& ps) {
  const RingPtr& ring = ps.front().coeff_ring();
  Value g = Value::zero(ring);
  for (const Poly& p : ps) {
    for (const Value& c : p.coeffs()) g = Value::gcd(g, c);
  }
  return g;
}

// One prime divisor of a non-unit element of Z[u] or Q[u].
Value prime_divisor_of(const Value& g, const Budget& budget) {
  const RingPtr& ring = g.ring();
  Poly gp = g.as_poly();  // over Z or Q, variable u
  if (ring->base()->kind() == RingKind::Integers) {
    ContentPrimitive cp = content_and_primitive(gp);
    Integer content = cp.content.as_integer();
    if (!content.is_unit()) {
      return Value::of_integer(ring, factorize(content, budget).factors.front().first);
    }
    Factorization f = kronecker_factor(cp.primitive, budget);
    return Value::of_poly(ring, f.factors.front().first);
  }
  // Q[u]: scale to an integer polynomial, factor, read one factor back
  Integer den(1);
  for (const Value& c : gp.coeffs()) den = Integer::lcm(den, c.as_rational().denominator());
  Poly scaled = gp.scaled(Value::of_rational(Rational(den)));
  std::vector<Value> int_coeffs;
  for (const Value& c : scaled.coeffs()) {
    int_coeffs.push_back(Value::of_integer(Ring::integers(), c.as_rational().numerator()));
  }
  Poly zp = Poly::from_coeffs(Ring::integers(), gp.var(), std::move(int_coeffs));
  Factorization f = kronecker_factor(content_and_primitive(zp).primitive, budget);
  Poly factor_q = f.factors.front().first.convert_coeffs(Ring::rationals());
  factor_q = factor_q.scaled(Value::inverse(factor_q.lead()));
  return Value::of_poly(ring, factor_q);
}

void check_common_inputs(const std::vector<Poly>& ps, std::size_t min_count) {
  if (ps.size() < min_count) {
    throw PreconditionError("assumption-on-values: need at least " + std::to_string(min_count) +
                            " polynomials");
  }
  const RingPtr& ring = ps.front().coeff_ring();
  for (const Poly& p : ps) {
    if (p.is_zero()) throw PreconditionError("assumption-on-values: zero polynomial");
    if (!ring_equal(p.coeff_ring(), ring)) {
      throw RingMismatchError("assumption-on-values: mixed coefficient rings");
    }
  }
}

AvVerdict scan_verdict(const std::vector<Poly>& ps, const std::vector<Value>& primes) {
  AvVerdict v;
  v.holds = true;
  for (const Value& p : primes) {
    ResidueScanRecord rec = scan_prime(ps, p);
    if (rec.all_residues_annihilate && v.holds) {
      v.holds = false;
      v.failing_prime = rec.prime;
    }
    v.evidence.push_back(std::move(rec));
  }
  return v;
}

AvVerdict content_verdict(const std::vector<Poly>& ps, const Budget& budget) {
  AvVerdict v;
  Value g = coefficient_gcd(ps);
  v.content_witness = g;
  v.holds = g.is_unit();
  if (!v.holds) v.failing_prime = prime_divisor_of(g, budget);
  return v;
}

}  // namespace

AvVerdict check_av2(const std::vector<Poly>& ps, const Budget& budget) {
  check_common_inputs(ps, 2);
  const RingPtr& ring = ps.front().coeff_ring();
  switch (classify(ring)) {
    case RingCase::Z: {
      BezoutCertificate cert = bezout_delta(ps);
      if (cert.delta.is_unit()) {
        AvVerdict v;
        v.holds = true;
        return v;
      }
      std::vector<Value> primes;
      for (const auto& [p, e] : factorize(cert.delta.as_integer(), budget).factors) {
        primes.push_back(Value::of_integer(Ring::integers(), p));
      }
      return scan_verdict(ps, primes);
    }
    case RingCase::FpU: {
      BezoutCertificate cert = bezout_delta(ps);
      if (cert.delta.is_unit()) {
        AvVerdict v;
        v.holds = true;
        return v;
      }
      std::vector<Value> primes;
      for (const auto& [pi, e] : factor_over_prime_field(cert.delta.as_poly(), budget).factors) {
        primes.push_back(Value::of_poly(ring, pi));
      }
      return scan_verdict(ps, primes);
    }
    case RingCase::ZU:
    case RingCase::QU: {
      // coprimality over the fraction field is still a hypothesis here
      Poly g = ps.front();
      for (std::size_t i = 1; i < ps.size(); ++i) g = poly_gcd(g, ps[i]);
      if (g.degree() > 0) throw CommonFactorError(g.str());
      return content_verdict(ps, budget);
    }
  }
  throw Error("check_av2: unreachable");
}

AvVerdict check_av1(const std::vector<Poly>& ps, const Budget& budget) {
  check_common_inputs(ps, 1);
  const RingPtr& ring = ps.front().coeff_ring();
  Poly product = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) product = product * ps[i];
  std::vector<Poly> single{product};

  switch (classify(ring)) {
    case RingCase::Z: {
      std::vector<Value> primes;
      for (long p = 2; p <= product.degree(); p = (p == 2 ? 3 : p + 2)) {
        if (is_prime(Integer(p))) primes.push_back(Value::of_integer(ring, Integer(p)));
      }
      Integer content = content_and_primitive(product).content.as_integer();
      if (!content.is_unit()) {
        for (const auto& [p, e] : factorize(content, budget).factors) {
          if (p > Integer(product.degree())) primes.push_back(Value::of_integer(ring, p));
        }
      }
      return scan_verdict(single, primes);
    }
    case RingCase::FpU: {
      const long p = ring->base()->prime().to_long();
      std::vector<Value> primes;
      // all irreducible pi with p^deg(pi) <= deg of the product
      long q = p;
      for (int d = 1; q <= product.degree(); ++d, q *= p) {
        for (const Value& cand : enumerate_fp_polys(ring, d, budget)) {
          Poly cp = cand.as_poly();
          if (cp.degree() != d || !cp.lead().is_one()) continue;
          if (factor_over_prime_field(cp, budget).is_irreducible()) primes.push_back(cand);
        }
      }
      Value content = content_and_primitive(product).content;
      if (!content.is_unit() && !content.is_zero()) {
        for (const auto& [pi, e] : factor_over_prime_field(content.as_poly(), budget).factors) {
          if (Integer::pow(Integer(p), pi.degree()) > Integer(product.degree())) {
            primes.push_back(Value::of_poly(ring, pi));
          }
        }
      }
      return scan_verdict(single, primes);
    }
    case RingCase::ZU:
    case RingCase::QU: {
      // residue property: AV1 holds iff no single P_i has a prime divisor
      AvVerdict v;
      v.holds = true;
      for (const Poly& p : ps) {
        Value g = coefficient_gcd({p});
        if (!g.is_unit()) {
          v.holds = false;
          v.content_witness = g;
          v.failing_prime = prime_divisor_of(g, budget);
          break;
        }
      }
      return v;
    }
  }
  throw Error("check_av1: unreachable");
}

}  // namespace schinzel

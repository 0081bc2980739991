#include "schinzel/coprime.hpp"

#include <algorithm>

#include "schinzel/bezout.hpp"
#include "schinzel/errors.hpp"
#include "schinzel/factor.hpp"
#include "schinzel/numtheory.hpp"
#include "schinzel/poly_gcd.hpp"
#include "schinzel/residues.hpp"

namespace schinzel {

namespace {

bool is_z(const RingPtr& r) { return r->kind() == RingKind::Integers; }
bool is_fp_u(const RingPtr& r) {
  return r->kind() == RingKind::PolyRing && r->base()->kind() == RingKind::PrimeField;
}
bool is_z_u(const RingPtr& r) {
  return r->kind() == RingKind::PolyRing && r->base()->kind() == RingKind::Integers;
}
bool is_q_u(const RingPtr& r) {
  return r->kind() == RingKind::PolyRing && r->base()->kind() == RingKind::Rationals;
}

void validate(const std::vector<Poly>& ps, std::size_t min_count = 2) {
  if (ps.size() < min_count) throw PreconditionError("coprime finder: needs s >= 2 polynomials");
  const RingPtr& ring = ps.front().coeff_ring();
  for (const Poly& p : ps) {
    if (p.is_zero()) throw PreconditionError("coprime finder: zero polynomial");
    if (!ring_equal(p.coeff_ring(), ring)) {
      throw RingMismatchError("coprime finder: mixed coefficient rings");
    }
  }
}

std::vector<Value> values_at(const std::vector<Poly>& ps, const Value& m) {
  std::vector<Value> out;
  out.reserve(ps.size());
  for (const Poly& p : ps) out.push_back(p.eval(m));
  return out;
}

CoprimeWitness make_witness(const std::vector<Poly>& ps, const Value& m) {
  CoprimeWitness w;
  w.m = m;
  w.values = values_at(ps, m);
  w.verification = verify_coprime_values(ps.front().coeff_ring(), w.values);
  return w;
}

Integer integer_content_of(const Value& v) {
  // gcd of the integer coefficients of an element of Z[u]
  Integer g(0);
  Poly p = v.as_poly();
  for (const Value& c : p.coeffs()) g = Integer::gcd(g, c.as_integer());
  return g;
}

}  // namespace

ValueGcdReport verify_coprime_values(const RingPtr& ring, const std::vector<Value>& values) {
  ValueGcdReport rep;
  if (is_z(ring) || is_fp_u(ring) || is_q_u(ring)) {
    Value g = Value::zero(ring);
    for (const Value& v : values) g = Value::gcd(g, v);
    rep.gcd = g;
    rep.coprime = g.is_unit();
    return rep;
  }
  if (is_z_u(ring)) {
    const RingPtr qu = Ring::poly_ring(Ring::rationals(), ring->var());
    Value g = Value::zero(qu);
    Integer content(0);
    for (const Value& v : values) {
      g = Value::gcd(g, Value::convert(v, qu));
      content = Integer::gcd(content, integer_content_of(v));
    }
    rep.gcd = g;
    rep.integer_content = content;
    rep.coprime = g.is_unit() && content.is_unit();
    return rep;
  }
  throw RingMismatchError("verify_coprime_values: unsupported ring " + ring->describe());
}

namespace {

// CRT over F_p[u] for pairwise coprime moduli (distinct irreducibles).
Value crt_fp_u(const RingPtr& ring, const std::vector<std::pair<Value, Poly>>& congruences) {
  Value m = Value::zero(ring);
  Poly modulus = Poly::constant(ring->base(), ring->var(), Value::one(ring->base()));
  bool first = true;
  for (const auto& [residue, pi] : congruences) {
    if (first) {
      m = residue;
      modulus = pi;
      first = false;
      continue;
    }
    PolyExtGcd e = ext_gcd_over_field(modulus, pi);
    // m' = r_old * B*pi + r_new * A*modulus  (mod modulus*pi)
    Value a_mod = Value::of_poly(ring, e.a * modulus);
    Value b_pi = Value::of_poly(ring, e.b * pi);
    Value combined = m * b_pi + residue * a_mod;
    modulus = modulus * pi;
    Poly rem = poly_divmod(combined.as_poly(), modulus).remainder;
    m = Value::of_poly(ring, rem);
  }
  return m;
}

}  // namespace

CoprimeWitness find_coprime_pid(const std::vector<Poly>& ps, const Budget& budget) {
  validate(ps);
  const RingPtr& ring = ps.front().coeff_ring();
  if (!is_z(ring) && !is_fp_u(ring)) {
    throw RingMismatchError("find_coprime_pid: supported over Z and F_p[u], got " +
                            ring->describe());
  }
  BezoutCertificate cert = bezout_delta(ps);
  if (cert.delta.is_unit()) {
    CoprimeWitness w = make_witness(ps, Value::zero(ring));
    if (!w.verification.coprime) throw Error("find_coprime_pid: unit delta witness failed");
    return w;
  }

  if (is_z(ring)) {
    std::vector<Congruence> congruences;
    for (const auto& [p, e] : factorize(cert.delta.as_integer(), budget).factors) {
      ResidueScanRecord rec = scan_prime(ps, Value::of_integer(ring, p));
      if (rec.all_residues_annihilate) throw AvViolation("AV2", p.str());
      congruences.push_back({rec.surviving_residue->as_integer(), p});
    }
    CrtResult c = crt(congruences);
    CoprimeWitness w = make_witness(ps, Value::of_integer(ring, c.value));
    if (!w.verification.coprime) throw Error("find_coprime_pid: constructed witness failed");
    return w;
  }

  // F_p[u]
  std::vector<std::pair<Value, Poly>> congruences;
  for (const auto& [pi, e] : factor_over_prime_field(cert.delta.as_poly(), budget).factors) {
    ResidueScanRecord rec = scan_prime(ps, Value::of_poly(ring, pi));
    if (rec.all_residues_annihilate) throw AvViolation("AV2", pi.str());
    congruences.emplace_back(*rec.surviving_residue, pi);
  }
  CoprimeWitness w = make_witness(ps, crt_fp_u(ring, congruences));
  if (!w.verification.coprime) throw Error("find_coprime_pid: constructed witness failed");
  return w;
}

CoprimeWitness find_coprime_infinite_field(const std::vector<Poly>& ps, const Budget& budget) {
  validate(ps);
  const RingPtr& ring = ps.front().coeff_ring();
  if (!is_q_u(ring)) {
    throw RingMismatchError("find_coprime_infinite_field: expected Q[u], got " +
                            ring->describe());
  }
  // no common prime divisor (AV2 via the residue property)
  {
    Value g = Value::zero(ring);
    for (const Poly& p : ps) {
      for (const Value& c : p.coeffs()) g = Value::gcd(g, c);
    }
    if (!g.is_unit()) throw AvViolation("AV2", g.str());
  }
  BezoutCertificate cert = bezout_delta(ps);

  // prime divisors of delta in Q[u] and an index i_pi per prime with
  // P_{i_pi} nonzero mod pi
  struct PrimePick {
    Poly pi;  // over Q, monic
    std::size_t index;
  };
  std::vector<PrimePick> picks;
  long termination_bound = 1;
  if (!cert.delta.is_unit()) {
    Poly delta_poly = cert.delta.as_poly();  // over Q, variable u
    Integer den(1);
    for (const Value& c : delta_poly.coeffs()) {
      den = Integer::lcm(den, c.as_rational().denominator());
    }
    std::vector<Value> zc;
    Poly cleared = delta_poly.scaled(Value::of_rational(Rational(den)));
    for (const Value& c : cleared.coeffs()) {
      zc.push_back(Value::of_integer(Ring::integers(), c.as_rational().numerator()));
    }
    Poly dz = Poly::from_coeffs(Ring::integers(), delta_poly.var(), std::move(zc));
    for (const auto& [f, e] : kronecker_factor(content_and_primitive(dz).primitive, budget).factors) {
      Poly pi = f.convert_coeffs(Ring::rationals());
      pi = pi.scaled(Value::inverse(pi.lead()));
      Value pi_v = Value::of_poly(ring, pi);
      std::optional<std::size_t> pick;
      for (std::size_t i = 0; i < ps.size() && !pick; ++i) {
        for (const Value& c : ps[i].coeffs()) {
          if (!Value::divides(pi_v, c)) {
            pick = i;
            break;
          }
        }
      }
      if (!pick) throw AvViolation("AV2", pi.str());
      picks.push_back({pi, *pick});
      termination_bound += ps[*pick].degree();
    }
  }

  long step = 0;
  for (long tried = 0; tried < termination_bound; ++tried) {
    // 0, 1, -1, 2, -2, ...
    long k = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    ++step;
    Value m = Value::of_integer(ring, Integer(k));
    bool good = true;
    for (const PrimePick& pp : picks) {
      Value v = ps[pp.index].eval(m);
      if (Value::divides(Value::of_poly(ring, pp.pi), v)) {
        good = false;
        break;
      }
    }
    if (good) {
      CoprimeWitness w = make_witness(ps, m);
      if (!w.verification.coprime) throw Error("find_coprime_infinite_field: witness failed");
      return w;
    }
  }
  throw Error("find_coprime_infinite_field: termination bound exceeded");
}

CoprimeWitness find_coprime_polyring(const std::vector<Poly>& ps, const Budget& budget) {
  validate(ps);
  const RingPtr& ring = ps.front().coeff_ring();
  if (!is_z_u(ring)) {
    throw RingMismatchError("find_coprime_polyring: expected Z[u], got " + ring->describe());
  }
  // no common divisor in Q(u)[y]
  Poly g = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) g = poly_gcd(g, ps[i]);
  if (g.degree() > 0) throw CommonFactorError(g.str());
  // no common prime divisor in Z[u] (covers primes of Z and of positive degree)
  {
    Value cg = Value::zero(ring);
    for (const Poly& p : ps) {
      for (const Value& c : p.coeffs()) cg = Value::gcd(cg, c);
    }
    if (!cg.is_unit()) throw AvViolation("AV2", cg.str());
  }
  // unit delta: every m works, return the trivial witness
  if (bezout_delta(ps).delta.is_unit()) {
    CoprimeWitness w = make_witness(ps, Value::zero(ring));
    if (!w.verification.coprime) throw Error("find_coprime_polyring: unit delta witness failed");
    return w;
  }

  int d = 0;
  for (const Poly& p : ps) {
    for (const Value& c : p.coeffs()) d = std::max(d, c.as_poly().degree());
  }
  const RingPtr& z = ring->base();
  auto candidate = [&](long l0, long l1, long l2) {
    std::vector<Value> coeffs(static_cast<std::size_t>(d) + 3, Value::zero(z));
    coeffs[0] = Value::of_integer(z, Integer(l0));
    coeffs[static_cast<std::size_t>(d) + 1] = Value::of_integer(z, Integer(l1));
    coeffs[static_cast<std::size_t>(d) + 2] = Value::of_integer(z, Integer(l2));
    return Value::of_poly(ring, Poly::from_coeffs(z, ring->var(), std::move(coeffs)));
  };

  // structured search: lambda2 = 1 (mod lambda1), all coordinates nonzero,
  // widening boxes so small witnesses come first
  const int bound = budget.lambda_bound;
  for (int box = 1; box <= bound; ++box) {
    for (long l1 = -box; l1 <= box; ++l1) {
      if (l1 == 0) continue;
      for (long l2 = -box; l2 <= box; ++l2) {
        if (l2 == 0 || (l2 - 1) % l1 != 0) continue;
        for (long l0 = -box; l0 <= box; ++l0) {
          if (l0 == 0) continue;
          if (std::max({std::abs(l0), std::abs(l1), std::abs(l2)}) != box) continue;
          CoprimeWitness w = make_witness(ps, candidate(l0, l1, l2));
          if (w.verification.coprime) return w;
        }
      }
    }
  }

  // exhaustive fallback by degree and height
  for (const Value& m : enumerate_z_polys(ring, budget.fallback_degree_cap,
                                          budget.fallback_height_cap, budget)) {
    CoprimeWitness w = make_witness(ps, m);
    if (w.verification.coprime) return w;
  }
  throw BudgetExceeded("find_coprime_polyring: structured search and fallback exhausted");
}

SearchBox SearchBox::interval(Integer lo, Integer hi) {
  SearchBox b;
  b.lo = std::move(lo);
  b.hi = std::move(hi);
  return b;
}

SearchBox SearchBox::poly_box(int max_degree, long max_height) {
  SearchBox b;
  b.max_degree = max_degree;
  b.max_height = max_height;
  return b;
}

std::optional<CoprimeWitness> brute_force_coprime(const std::vector<Poly>& ps,
                                                  const SearchBox& box, const Budget& budget) {
  validate(ps);
  const RingPtr& ring = ps.front().coeff_ring();
  auto try_m = [&](const Value& m) -> std::optional<CoprimeWitness> {
    CoprimeWitness w = make_witness(ps, m);
    if (w.verification.coprime) return w;
    return std::nullopt;
  };
  if (is_z(ring)) {
    for (Integer m = box.lo; m <= box.hi && !budget.interrupted(); m += Integer(1)) {
      if (auto w = try_m(Value::of_integer(ring, m))) return w;
    }
    return std::nullopt;
  }
  if (is_fp_u(ring)) {
    for (const Value& m : enumerate_fp_polys(ring, box.max_degree, budget)) {
      if (budget.interrupted()) break;
      if (auto w = try_m(m)) return w;
    }
    return std::nullopt;
  }
  if (is_z_u(ring)) {
    for (const Value& m : enumerate_z_polys(ring, box.max_degree, box.max_height, budget)) {
      if (budget.interrupted()) break;
      if (auto w = try_m(m)) return w;
    }
    return std::nullopt;
  }
  throw RingMismatchError("brute_force_coprime: unsupported ring " + ring->describe());
}

}  // namespace schinzel

#include "schinzel/hilbert.hpp"

#include <algorithm>
#include <set>

#include "schinzel/bezout.hpp"
#include "schinzel/errors.hpp"
#include "schinzel/factor.hpp"
#include "schinzel/numtheory.hpp"
#include "schinzel/poly_gcd.hpp"
#include "schinzel/residues.hpp"

namespace schinzel {

Poly specialize_at(const Poly& p, const Value& m) {
  const RingPtr& coeff_ring = p.coeff_ring();
  if (coeff_ring->kind() != RingKind::PolyRing) {
    throw RingMismatchError("specialize_at: coefficients are not polynomials in t");
  }
  if (!ring_equal(m.ring(), coeff_ring->base())) {
    throw RingMismatchError("specialize_at: point lives in " + m.ring()->describe() +
                            ", expected " + coeff_ring->base()->describe());
  }
  std::vector<Value> specialized;
  specialized.reserve(p.coeffs().size());
  for (const Value& c : p.coeffs()) specialized.push_back(c.as_poly().eval(m));
  return Poly::from_coeffs(coeff_ring->base(), p.var(), std::move(specialized));
}

namespace {

// k = 0, 1, -1, 2, -2, ...
long zigzag(long step) { return (step % 2 == 1) ? (step + 1) / 2 : -(step / 2); }

std::vector<Poly> nonzero_coefficient_polys(const Poly& p) {
  std::vector<Poly> out;
  for (const Value& c : p.coeffs()) {
    if (!c.is_zero()) out.push_back(c.as_poly());
  }
  return out;
}

Integer z_content(const Poly& p) {
  Integer g(0);
  for (const Value& c : p.coeffs()) g = Integer::gcd(g, c.as_integer());
  return g;
}

}  // namespace

ProgressionWitness primitivity_progression(const std::vector<Poly>& ps, const Budget& budget) {
  if (ps.empty()) throw PreconditionError("primitivity_progression: no input");
  const RingPtr& coeff_ring = ps.front().coeff_ring();
  if (coeff_ring->kind() != RingKind::PolyRing ||
      coeff_ring->base()->kind() != RingKind::Integers) {
    throw RingMismatchError("primitivity_progression: expected polynomials in t, y over Z");
  }
  const RingPtr& z = coeff_ring->base();

  ProgressionWitness out;
  for (const Poly& p : ps) {
    if (p.is_zero()) throw PreconditionError("primitivity_progression: zero polynomial");
    std::vector<Poly> coeffs = nonzero_coefficient_polys(p);
    if (coeffs.size() < 2) {
      throw CommonFactorError("coefficient family of " + p.str() + " has a single member");
    }
    // bezout_delta also rejects a common Q[t]-factor of the coefficients
    out.deltas.push_back(bezout_delta(coeffs).delta.as_integer());
  }

  Poly product = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) product = product * ps[i];
  std::vector<Poly> product_coeffs = nonzero_coefficient_polys(product);

  std::set<Integer> primes;
  for (const Integer& d : out.deltas) {
    for (const auto& [p, e] : factorize(d, budget).factors) primes.insert(p);
  }

  std::vector<Congruence> congruences;
  for (const Integer& p : primes) {
    ResidueScanRecord rec = scan_prime(product_coeffs, Value::of_integer(z, p));
    if (rec.all_residues_annihilate) throw AvViolation("AV3", p.str());
    PrimeResidueChoice choice{p, rec.surviving_residue->as_integer(), *rec.surviving_index};
    congruences.push_back({choice.residue, p});
    out.records.push_back(choice);
  }

  CrtResult c = crt(congruences);
  out.b0 = c.value;
  out.a0 = Integer(1);
  for (const Integer& p : primes) out.a0 *= p;

  // sanity: the first few members of the progression specialize primitively
  for (long k = -2; k <= 2; ++k) {
    Integer t_star = out.b0 + out.a0 * Integer(k);
    for (const Poly& p : ps) {
      Poly s = specialize_at(p, Value::of_integer(z, t_star));
      if (s.is_zero() || !z_content(s).is_unit()) {
        throw Error("primitivity_progression: specialization at " + t_star.str() +
                    " is not primitive");
      }
    }
  }
  return out;
}

SpecializationReport irreducible_specializations(const std::vector<Poly>& ps,
                                                 const ProgressionWitness& progression,
                                                 long want, long scan_cap,
                                                 const Budget& budget) {
  const RingPtr z = Ring::integers();
  SpecializationReport report;
  report.want = want;
  report.scan_cap = scan_cap;
  long hits = 0;
  for (long step = 0; step <= 2 * scan_cap; ++step) {
    if (budget.interrupted()) {
      report.interrupted = true;
      report.exhausted = true;
      return report;
    }
    long k = zigzag(step);
    Integer m = progression.b0 + progression.a0 * Integer(k);
    SpecializationEntry entry;
    entry.m = m;
    entry.all_irreducible = true;
    for (const Poly& p : ps) {
      Poly s = specialize_at(p, Value::of_integer(z, m));
      bool irred = is_irreducible_over_z(s, budget);
      entry.irreducible.push_back(irred);
      entry.all_irreducible = entry.all_irreducible && irred;
    }
    ++report.scanned;
    if (entry.all_irreducible) {
      report.hits.push_back(m);
      ++hits;
    }
    report.entries.push_back(std::move(entry));
    if (hits >= want) return report;
  }
  report.exhausted = true;
  return report;
}

namespace {

bool is_irreducible_element(const Value& c, const Budget& budget) {
  const RingPtr& ring = c.ring();
  if (c.is_zero() || c.is_unit()) return false;
  if (ring->base()->kind() == RingKind::Integers) {
    Poly cu = c.as_poly();
    if (cu.is_constant()) return is_prime(cu.constant_value().as_integer());
    if (!z_content(cu).is_unit()) return false;
    return is_irreducible_over_z(cu, budget);
  }
  return factor_over_prime_field(c.as_poly(), budget).is_irreducible();
}

// Kronecker substitution y -> x^K with K = deg_u + 1 flattens R[u][y] into
// R[x]; digits of length K decode candidates back.
struct KroneckerImage {
  Poly image;  // over R
  int block = 0;
};

KroneckerImage kronecker_image(const Poly& q) {
  const RingPtr& ru = q.coeff_ring();
  const RingPtr& r = ru->base();
  int du = 0;
  for (const Value& c : q.coeffs()) du = std::max(du, c.as_poly().degree());
  const int k = du + 1;
  std::vector<Value> w(static_cast<std::size_t>(q.degree()) * k + du + 1, Value::zero(r));
  for (int j = 0; j <= q.degree(); ++j) {
    Poly cj = q.coeff(static_cast<std::size_t>(j)).as_poly();
    for (int a = 0; a <= cj.degree(); ++a) {
      w[static_cast<std::size_t>(j) * k + static_cast<std::size_t>(a)] =
          cj.coeff(static_cast<std::size_t>(a));
    }
  }
  return {Poly::from_coeffs(r, "x", std::move(w)), k};
}

Poly dekronecker(const Poly& d, int block, const RingPtr& ru, const std::string& yvar) {
  const RingPtr& r = ru->base();
  const int ydeg = d.degree() / block;
  std::vector<Value> coeffs;
  coeffs.reserve(ydeg + 1);
  for (int j = 0; j <= ydeg; ++j) {
    std::vector<Value> digit;
    digit.reserve(block);
    for (int a = 0; a < block; ++a) {
      std::size_t idx = static_cast<std::size_t>(j) * block + static_cast<std::size_t>(a);
      digit.push_back(idx <= static_cast<std::size_t>(d.degree()) ? d.coeff(idx)
                                                                  : Value::zero(r));
    }
    coeffs.push_back(Value::of_poly(ru, Poly::from_coeffs(r, ru->var(), std::move(digit))));
  }
  return Poly::from_coeffs(ru, yvar, std::move(coeffs));
}

// Cheap rejection before the exact bivariate division: substitute a large
// integer for u and test divisibility over Q.
bool prune_candidate_z(const Poly& cand, const Poly& q) {
  const RingPtr qq = Ring::rationals();
  const RingPtr z = Ring::integers();
  Value point = Value::of_integer(z, Integer(100003));
  auto eval_poly = [&](const Poly& p) {
    std::vector<Value> coeffs;
    coeffs.reserve(p.coeffs().size());
    for (const Value& c : p.coeffs()) {
      coeffs.push_back(Value::convert(c.as_poly().eval(point), qq));
    }
    return Poly::from_coeffs(qq, p.var(), std::move(coeffs));
  };
  Poly cq = eval_poly(cand);
  Poly qq_poly = eval_poly(q);
  if (cq.degree() != cand.degree()) return true;  // lead vanished; cannot prune
  return poly_divmod(qq_poly, cq).remainder.is_zero();
}

}  // namespace

std::optional<Poly> bivariate_factor_search(const Poly& q, const Budget& budget) {
  const RingPtr& ru = q.coeff_ring();
  if (ru->kind() != RingKind::PolyRing ||
      (ru->base()->kind() != RingKind::Integers &&
       ru->base()->kind() != RingKind::PrimeField)) {
    throw RingMismatchError("bivariate_factor_search: expected Z[u][y] or F_p[u][y]");
  }
  const int n = q.degree();
  if (n < 2) return std::nullopt;
  const bool over_z = ru->base()->kind() == RingKind::Integers;

  KroneckerImage ki = kronecker_image(q);
  Factorization fac;
  if (over_z) {
    if (ki.image.degree() > budget.kronecker_degree_cap) {
      throw BudgetExceeded("bivariate_factor_search: univariate image degree " +
                           std::to_string(ki.image.degree()) + " above the Kronecker cap");
    }
    fac = kronecker_factor(ki.image, budget);
  } else {
    fac = factor_over_prime_field(ki.image, budget);
  }

  // content divisors (Z case): a factor's image may be d * (subset product)
  std::vector<Integer> content_divisors{Integer(1)};
  if (over_z) {
    Integer content = fac.unit.as_integer().abs();
    if (!content.is_unit()) content_divisors = divisors(factorize(content, budget));
  }

  // odometer over factor multiplicities
  std::vector<unsigned> idx(fac.factors.size(), 0);
  long combos = 0;
  while (true) {
    if (++combos > budget.kronecker_combination_cap) {
      throw BudgetExceeded("bivariate_factor_search: combination cap hit");
    }
    bool nontrivial = false;
    for (unsigned e : idx) nontrivial = nontrivial || e > 0;
    if (nontrivial) {
      Poly d = Poly::constant(ki.image.coeff_ring(), ki.image.var(),
                              Value::one(ki.image.coeff_ring()));
      for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        if (idx[i] > 0) d = d * fac.factors[i].first.pow(idx[i]);
      }
      const int ydeg = d.degree() / ki.block;
      if (ydeg >= 1 && 2 * ydeg <= n) {
        for (const Integer& cd : content_divisors) {
          Poly scaled =
              cd.is_one() ? d : d.scaled(Value::of_integer(d.coeff_ring(), cd));
          Poly cand = dekronecker(scaled, ki.block, ru, q.var());
          if (cand.degree() != ydeg) continue;
          if (over_z && !prune_candidate_z(cand, q)) continue;
          if (poly_divides(cand, q)) return cand;
        }
      }
    }
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] <= fac.factors[i].second) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
  return std::nullopt;
}

PolyringScanReport specialize_polyring_irreducible(const Poly& p, const SearchBox& box,
                                                   long want, const Budget& budget) {
  const RingPtr& coeff_ring = p.coeff_ring();  // R[u][t]
  if (coeff_ring->kind() != RingKind::PolyRing ||
      coeff_ring->base()->kind() != RingKind::PolyRing) {
    throw RingMismatchError(
        "specialize_polyring_irreducible: expected polynomials in t, y over Z[u] or F_p[u]");
  }
  const RingPtr& zu = coeff_ring->base();
  const bool over_z = zu->base()->kind() == RingKind::Integers;
  if (p.degree() < 1) {
    throw PreconditionError("specialize_polyring_irreducible: degree in y must be >= 1");
  }

  PolyringScanReport report;
  report.want = want;
  std::vector<Value> candidates =
      over_z ? enumerate_z_polys(zu, box.max_degree, box.max_height, budget)
             : enumerate_fp_polys(zu, box.max_degree, budget);

  for (const Value& m : candidates) {
    if (budget.interrupted()) {
      report.interrupted = true;
      report.exhausted = true;
      return report;
    }
    Poly q = specialize_at(p, m);
    PolyringScanEntry entry;
    entry.m = m;
    report.factor_degree_bound = std::max(report.factor_degree_bound, q.degree() / 2);
    bool hit = false;
    if (q.is_zero()) {
      // nothing
    } else if (q.is_constant()) {
      hit = is_irreducible_element(q.constant_value(), budget);
      entry.primitive = hit;
      entry.no_factor_found = hit;
    } else {
      Value content = Value::zero(zu);
      for (const Value& c : q.coeffs()) content = Value::gcd(content, c);
      entry.primitive = content.is_unit();
      if (entry.primitive) {
        entry.no_factor_found = !bivariate_factor_search(q, budget).has_value();
        hit = entry.no_factor_found;
      }
    }
    ++report.scanned;
    if (hit) report.hits.push_back(m);
    report.entries.push_back(std::move(entry));
    if (static_cast<long>(report.hits.size()) >= want) return report;
  }
  report.exhausted = true;
  return report;
}

std::vector<ModNWitness> mod_n_schinzel(const std::vector<Poly>& ps, const Integer& n,
                                        long want, const Budget& budget) {
  if (ps.empty()) throw PreconditionError("mod_n_schinzel: no polynomials");
  const RingPtr& ring = ps.front().coeff_ring();
  if (ring->kind() != RingKind::Integers) {
    throw RingMismatchError("mod_n_schinzel: defined over Z");
  }
  if (n < Integer(1)) throw PreconditionError("mod_n_schinzel: N must be >= 1");

  AvVerdict av1 = check_av1(ps, budget);
  if (!av1.holds) throw AvViolation("AV1", av1.failing_prime ? av1.failing_prime->str() : "?");

  Poly product = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) product = product * ps[i];

  Integer m0(0);
  if (!n.is_unit()) {
    std::vector<Poly> pair{product,
                           Poly::constant(ring, product.var(), Value::of_integer(ring, n))};
    m0 = find_coprime_pid(pair, budget).m.as_integer();
  }

  std::vector<ModNWitness> out;
  for (long step = 0; static_cast<long>(out.size()) < want && step <= 2 * budget.scan_cap;
       ++step) {
    if (budget.interrupted()) break;
    Integer m = m0 + n * Integer(zigzag(step));
    Integer pm = product.eval(Value::of_integer(ring, m)).as_integer();
    if (!Integer::gcd(pm, n).is_unit()) {
      throw Error("mod_n_schinzel: progression member lost coprimality");
    }
    ModNWitness w;
    w.m = m;
    w.modulus = n;
    for (const Poly& p : ps) {
      Integer value = p.eval(Value::of_integer(ring, m)).as_integer();
      Integer residue = Integer::mod_floor(value, n);
      Integer prime = prime_in_progression(residue, n, Integer(2), budget);
      if (!is_prime(prime) || Integer::divides(prime, n) ||
          Integer::mod_floor(prime - value, n) != Integer(0)) {
        throw Error("mod_n_schinzel: certificate re-check failed");
      }
      w.entries.push_back({value, prime});
    }
    out.push_back(std::move(w));
  }
  if (static_cast<long>(out.size()) < want) {
    throw BudgetExceeded("mod_n_schinzel: ran out of scan budget");
  }
  return out;
}

std::vector<GoldbachWitness> goldbach_mod_n(const Integer& two_n, const Integer& n, long want,
                                            const Budget& budget) {
  if (!two_n.is_even()) throw PreconditionError("goldbach_mod_n: 2n must be even");
  const RingPtr z = Ring::integers();
  Poly y = Poly::variable(z, "y");
  Poly complement = Poly::constant(z, "y", Value::of_integer(z, two_n)) - y;
  std::vector<ModNWitness> witnesses = mod_n_schinzel({y, complement}, n, want, budget);
  std::vector<GoldbachWitness> out;
  out.reserve(witnesses.size());
  for (const ModNWitness& w : witnesses) {
    GoldbachWitness g{w.entries[0].prime, w.entries[1].prime, w.m};
    if (Integer::mod_floor(g.p + g.q - two_n, n) != Integer(0)) {
      throw Error("goldbach_mod_n: p + q incongruent to 2n");
    }
    out.push_back(g);
  }
  return out;
}

}  // namespace schinzel

#include "schinzel/factor.hpp"

#include <algorithm>
#include <optional>

#include "schinzel/errors.hpp"
#include "schinzel/numtheory.hpp"
#include "schinzel/poly_gcd.hpp"

namespace schinzel {

Poly Factorization::reconstruct(const std::string& var) const {
  Poly acc = Poly::constant(unit.ring(), var, unit);
  for (const auto& [f, e] : factors) acc = acc * f.pow(e);
  return acc;
}

namespace {

void sort_and_merge(std::vector<std::pair<Poly, unsigned>>& factors) {
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return Poly::compare(a.first, b.first) < 0; });
  std::vector<std::pair<Poly, unsigned>> merged;
  for (auto& [f, e] : factors) {
    if (!merged.empty() && merged.back().first == f) {
      merged.back().second += e;
    } else {
      merged.emplace_back(std::move(f), e);
    }
  }
  factors = std::move(merged);
}

// Trial division runs on plain machine-word coefficient vectors; the
// generic Value machinery is far too slow for the 2^d monic candidates.
using SmallPoly = std::vector<long>;  // ascending coefficients in [0, p)

void strim(SmallPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a / d for monic d; the remainder decides divisibility
std::optional<SmallPoly> sdiv_exact(const SmallPoly& a, const SmallPoly& d, long p) {
  SmallPoly rem = a;
  const int db = static_cast<int>(d.size()) - 1;
  SmallPoly quot(a.size() >= d.size() ? a.size() - d.size() + 1 : 0, 0);
  while (static_cast<int>(rem.size()) - 1 >= db) {
    long c = rem.back();
    if (c != 0) {
      std::size_t shift = rem.size() - d.size();
      quot[shift] = c;
      for (int k = 0; k <= db; ++k) {
        long v = (rem[shift + static_cast<std::size_t>(k)] - c * d[static_cast<std::size_t>(k)]) % p;
        rem[shift + static_cast<std::size_t>(k)] = v < 0 ? v + p : v;
      }
    }
    rem.pop_back();  // leading coefficient eliminated
  }
  strim(rem);
  if (!rem.empty()) return std::nullopt;
  return quot;
}

long smod_inverse(long a, long p) {
  ExtGcdResult e = ext_gcd(Integer(a), Integer(p));
  return Integer::mod_floor(e.x, Integer(p)).to_long();
}

SmallPoly to_small(const Poly& poly) {
  SmallPoly out;
  out.reserve(poly.coeffs().size());
  for (const Value& c : poly.coeffs()) out.push_back(c.as_integer().to_long());
  return out;
}

Poly from_small(const SmallPoly& sp, const RingPtr& field, const std::string& var) {
  std::vector<Value> coeffs;
  coeffs.reserve(sp.size());
  for (long c : sp) coeffs.push_back(Value::of_integer(field, Integer(c)));
  return Poly::from_coeffs(field, var, std::move(coeffs));
}

}  // namespace

Factorization factor_over_prime_field(const Poly& p, const Budget& budget) {
  const RingPtr& field = p.coeff_ring();
  if (field->kind() != RingKind::PrimeField) {
    throw RingMismatchError("factor_over_prime_field: coefficients in " + field->describe());
  }
  if (p.is_zero()) return {Value::zero(field), {}};
  Factorization out;
  out.unit = p.lead();
  if (p.is_constant()) return out;
  if (!field->prime().fits_long()) {
    throw BudgetExceeded("factor_over_prime_field: prime too large for exhaustive search");
  }
  const long prime = field->prime().to_long();

  SmallPoly work = to_small(p);
  {
    long inv = smod_inverse(work.back(), prime);
    for (long& c : work) c = c * inv % prime;
  }

  long trials = 0;
  for (int d = 1; 2 * d <= static_cast<int>(work.size()) - 1; ++d) {
    SmallPoly cand(static_cast<std::size_t>(d) + 1, 0);
    cand.back() = 1;
    bool more = true;
    while (more) {
      if (++trials > budget.fp_trial_cap) {
        throw BudgetExceeded("factor_over_prime_field: trial divisor cap hit");
      }
      unsigned mult = 0;
      while (static_cast<int>(work.size()) - 1 >= d) {
        std::optional<SmallPoly> q = sdiv_exact(work, cand, prime);
        if (!q) break;
        work = std::move(*q);
        ++mult;
      }
      if (mult > 0) out.factors.emplace_back(from_small(cand, field, p.var()), mult);
      if (2 * d > static_cast<int>(work.size()) - 1) break;
      int i = 0;
      for (; i < d; ++i) {
        if (++cand[static_cast<std::size_t>(i)] < prime) break;
        cand[static_cast<std::size_t>(i)] = 0;
      }
      more = i < d;
    }
  }
  if (work.size() >= 2) out.factors.emplace_back(from_small(work, field, p.var()), 1);
  sort_and_merge(out.factors);
  return out;
}

namespace {

// Lagrange interpolation through (x_j, w_j); returns the Q-polynomial.
Poly interpolate_q(const std::vector<Integer>& xs, const std::vector<Integer>& ws,
                   const std::string& var) {
  const RingPtr& q_ring = Ring::rationals();
  Poly acc(q_ring, var);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    Poly basis = Poly::constant(q_ring, var, Value::one(q_ring));
    Rational denom(1);
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k == j) continue;
      // (x - x_k)
      basis = basis * Poly::from_coeffs(q_ring, var,
                                        {Value::of_rational(Rational(-xs[k])),
                                         Value::one(q_ring)});
      denom = denom * Rational(xs[j] - xs[k]);
    }
    Value scale = Value::of_rational(Rational(ws[j]) / denom);
    acc = acc + basis.scaled(scale);
  }
  return acc;
}

// Integer-coefficient image of a Q-polynomial, or nullopt.
std::optional<Poly> to_integer_poly(const Poly& p) {
  std::vector<Value> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const Value& c : p.coeffs()) {
    const Rational& q = c.as_rational();
    if (!q.is_integer()) return std::nullopt;
    coeffs.push_back(Value::of_integer(Ring::integers(), q.numerator()));
  }
  return Poly::from_coeffs(Ring::integers(), p.var(), std::move(coeffs));
}

// Signed divisor lists; position 0 is restricted to positive divisors since
// factors are only determined up to sign.
std::vector<std::vector<Integer>> divisor_lists(const std::vector<Integer>& values,
                                                const Budget& budget) {
  std::vector<std::vector<Integer>> lists;
  lists.reserve(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    std::vector<Integer> ds = divisors(factorize(values[j].abs(), budget));
    if (j > 0) {
      std::vector<Integer> with_sign;
      with_sign.reserve(2 * ds.size());
      for (const Integer& d : ds) {
        with_sign.push_back(d);
        with_sign.push_back(-d);
      }
      ds = std::move(with_sign);
    }
    lists.push_back(std::move(ds));
  }
  return lists;
}

struct KroneckerSplit {
  // Finds an irreducible factor of minimal degree of a primitive polynomial
  // of degree >= 1, together with the cofactor. Returns false when the input
  // is irreducible.
  bool split(const Poly& prim, Poly& factor, Poly& rest, const Budget& budget) {
    const RingPtr& z = Ring::integers();
    const std::string& var = prim.var();
    if (prim.degree() == 1) return false;
    // linear factors from integer roots first: P(r) = 0
    for (int d = 1; 2 * d <= prim.degree(); ++d) {
      std::vector<Integer> xs, vs;
      Integer point(0);
      // points 0, 1, -1, 2, -2, ... skipping roots (they split off directly)
      long step = 0;
      while (static_cast<int>(xs.size()) <= d) {
        Integer x = (step % 2 == 0) ? Integer(step / 2) : Integer(-(step / 2 + 1));
        ++step;
        Value v = prim.eval(Value::of_integer(z, x));
        if (v.is_zero()) {
          factor = Poly::from_coeffs(z, var, {Value::of_integer(z, -x), Value::one(z)});
          rest = poly_divexact(prim, factor);
          return true;
        }
        xs.push_back(x);
        vs.push_back(v.as_integer());
      }
      std::vector<std::vector<Integer>> lists = divisor_lists(vs, budget);
      // odometer over divisor tuples
      std::vector<std::size_t> idx(lists.size(), 0);
      long combos = 0;
      while (true) {
        if (++combos > budget.kronecker_combination_cap) {
          throw BudgetExceeded("kronecker_factor: divisor combination cap hit");
        }
        std::vector<Integer> ws;
        ws.reserve(lists.size());
        for (std::size_t j = 0; j < lists.size(); ++j) ws.push_back(lists[j][idx[j]]);
        Poly cand_q = interpolate_q(xs, ws, var);
        if (cand_q.degree() == d) {
          std::optional<Poly> cand = to_integer_poly(cand_q);
          if (cand && poly_divides(*cand, prim)) {
            factor = *cand;
            rest = poly_divexact(prim, *cand);
            return true;
          }
        }
        std::size_t j = 0;
        for (; j < lists.size(); ++j) {
          if (++idx[j] < lists[j].size()) break;
          idx[j] = 0;
        }
        if (j == lists.size()) break;
      }
    }
    return false;
  }
};

}  // namespace

Factorization kronecker_factor(const Poly& p, const Budget& budget) {
  const RingPtr& z = Ring::integers();
  if (!ring_equal(p.coeff_ring(), z)) {
    throw RingMismatchError("kronecker_factor: coefficients in " + p.coeff_ring()->describe());
  }
  if (p.degree() > budget.kronecker_degree_cap) {
    throw BudgetExceeded("kronecker_factor: degree " + std::to_string(p.degree()) +
                         " above cap " + std::to_string(budget.kronecker_degree_cap));
  }
  Factorization out;
  if (p.is_zero()) {
    out.unit = Value::zero(z);
    return out;
  }
  ContentPrimitive cp = content_and_primitive(p);
  Integer unit = cp.content.as_integer();
  std::vector<Poly> queue{cp.primitive};
  KroneckerSplit splitter;
  while (!queue.empty()) {
    Poly cur = queue.back();
    queue.pop_back();
    if (cur.is_constant()) {
      unit = unit * cur.constant_value().as_integer();
      continue;
    }
    if (cur.lead().as_integer().sign() < 0) {
      unit = -unit;
      cur = -cur;
    }
    Poly factor, rest;
    if (splitter.split(cur, factor, rest, budget)) {
      queue.push_back(factor);
      queue.push_back(rest);
    } else {
      out.factors.emplace_back(cur, 1);
    }
  }
  out.unit = Value::of_integer(z, unit);
  sort_and_merge(out.factors);
  return out;
}

bool is_irreducible_over_z(const Poly& p, const Budget& budget) {
  if (p.is_zero()) return false;
  if (p.is_constant()) return is_prime(p.constant_value().as_integer());
  Factorization f = kronecker_factor(p, budget);
  return f.is_irreducible();
}

}  // namespace schinzel

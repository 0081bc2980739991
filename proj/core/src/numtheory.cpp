#include "schinzel/numtheory.hpp"

#include <algorithm>

#include "schinzel/errors.hpp"

namespace schinzel {

namespace {

// One merged congruence x = r (mod n), n > 0.
Congruence merge(const Congruence& a, const Congruence& b) {
  const Integer& n1 = a.modulus;
  const Integer& n2 = b.modulus;
  ExtGcdResult e = ext_gcd(n1, n2);
  Integer diff = b.residue - a.residue;
  if (!Integer::divides(e.g, diff)) {
    throw IncompatibleCongruences("conflicting congruences modulo gcd " + e.g.str());
  }
  Integer lcm = Integer::divexact(n1, e.g) * n2;
  // x = r1 + n1 * ((diff/g) * inv(n1/g) mod (n2/g))
  Integer t = Integer::divexact(diff, e.g) * e.x;
  Integer step_mod = Integer::divexact(n2, e.g);
  t = Integer::mod_floor(t, step_mod);
  Integer x = a.residue + n1 * t;
  return {Integer::mod_floor(x, lcm), lcm};
}

}  // namespace

CrtResult crt(const std::vector<Congruence>& congruences) {
  Congruence acc{Integer(0), Integer(1)};
  for (const Congruence& c : congruences) {
    if (c.modulus.is_zero()) throw PreconditionError("crt: zero modulus");
    Congruence normalized{Integer::mod_floor(c.residue, c.modulus.abs()), c.modulus.abs()};
    acc = merge(acc, normalized);
  }
  return {acc.residue, acc.modulus};
}

namespace {

bool miller_rabin_witness(const Integer& n, const Integer& base, const Integer& d, unsigned long s) {
  Integer a = Integer::mod_floor(base, n);
  if (a.is_zero()) return false;  // base divisible by n: no information
  Integer x = Integer::powm(a, d, n);
  Integer n_minus_1 = n - Integer(1);
  if (x.is_one() || x == n_minus_1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = Integer::powm(x, Integer(2), n);
    if (x == n_minus_1) return false;
  }
  return true;  // composite witnessed
}

}  // namespace

bool is_prime(const Integer& n_in) {
  Integer n = n_in.abs();
  if (n < Integer(2)) return false;
  static const long small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (long p : small_primes) {
    if (n == Integer(p)) return true;
    if (Integer::divides(Integer(p), n)) return false;
  }
  // n - 1 = d * 2^s
  Integer d = n - Integer(1);
  unsigned long s = 0;
  while (d.is_even()) {
    d = Integer::divexact(d, Integer(2));
    ++s;
  }
  for (long p : small_primes) {
    if (miller_rabin_witness(n, Integer(p), d, s)) return false;
  }
  // The 13-prime witness set is deterministic below 3.3e24 (~81 bits).
  if (n.bit_length() <= 81) return true;
  gmp_randstate_t state;
  gmp_randinit_mt(state);
  gmp_randseed_ui(state, 0x5eed5eedUL);
  mpz_class bound = n.raw() - 3;
  bool composite = false;
  for (int round = 0; round < 40 && !composite; ++round) {
    mpz_class b;
    mpz_urandomm(b.get_mpz_t(), state, bound.get_mpz_t());
    composite = miller_rabin_witness(n, Integer(mpz_class(b + 2)), d, s);
  }
  gmp_randclear(state);
  return !composite;
}

Integer FactoredInteger::reconstruct() const {
  Integer out(unit);
  for (const auto& [p, e] : factors) out *= Integer::pow(p, e);
  return out;
}

namespace {

// Brent's cycle-finding variant of Pollard rho; returns a nontrivial factor
// of odd composite n, or 0 when the iteration budget runs out.
Integer pollard_brent(const Integer& n, long max_iters) {
  const mpz_class& nz = n.raw();
  for (unsigned long c = 1; c <= 24; ++c) {
    mpz_class y = 2, x, ys, q = 1, g = 1;
    long r = 1, iters = 0;
    const long m = 128;
    while (g == 1 && iters < max_iters) {
      x = y;
      for (long i = 0; i < r; ++i) {
        y = (y * y + c) % nz;
      }
      long k = 0;
      while (k < r && g == 1) {
        ys = y;
        long span = std::min(m, r - k);
        for (long i = 0; i < span; ++i) {
          y = (y * y + c) % nz;
          q = q * abs(x - y) % nz;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), nz.get_mpz_t());
        k += m;
        iters += span;
      }
      r *= 2;
    }
    if (g == nz) {
      // backtrack one squaring at a time
      do {
        ys = (ys * ys + c) % nz;
        mpz_class diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), nz.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != nz) return Integer(std::move(g));
    // cycle degenerated or budget ran out for this c; retry with the next one
    if (iters >= max_iters) return Integer(0);
  }
  return Integer(0);
}

void factor_recurse(const Integer& n, const Budget& budget, std::vector<Integer>& primes) {
  if (n.is_one()) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  // perfect powers: reduce to the root
  for (unsigned long e = 2; e <= n.bit_length(); ++e) {
    mpz_class root;
    if (mpz_root(root.get_mpz_t(), n.raw().get_mpz_t(), e) != 0) {
      std::vector<Integer> sub;
      factor_recurse(Integer(std::move(root)), budget, sub);
      for (unsigned long i = 0; i < e; ++i) primes.insert(primes.end(), sub.begin(), sub.end());
      return;
    }
  }
  Integer d = pollard_brent(n, budget.rho_iterations);
  if (d.is_zero()) {
    throw BudgetExceeded("factorize: composite cofactor " + n.str() + " survived the rho budget");
  }
  factor_recurse(d, budget, primes);
  factor_recurse(Integer::divexact(n, d), budget, primes);
}

}  // namespace

FactoredInteger factorize(const Integer& n_in, const Budget& budget) {
  if (n_in.is_zero()) throw PreconditionError("factorize: zero input");
  FactoredInteger out;
  out.unit = n_in.sign();
  Integer n = n_in.abs();

  std::vector<Integer> primes;
  for (long p = 2; p <= budget.trial_division_limit && Integer(p) * Integer(p) <= n; p = (p == 2 ? 3 : p + 2)) {
    while (Integer::divides(Integer(p), n)) {
      primes.push_back(Integer(p));
      n = Integer::divexact(n, Integer(p));
    }
  }
  factor_recurse(n, budget, primes);

  std::sort(primes.begin(), primes.end());
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    out.factors.emplace_back(primes[i], static_cast<unsigned>(j - i));
    i = j;
  }
  return out;
}

std::vector<Integer> divisors(const FactoredInteger& f) {
  std::vector<Integer> out{Integer(1)};
  for (const auto& [p, e] : f.factors) {
    std::size_t n = out.size();
    Integer pk(1);
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer prime_in_progression(const Integer& a, const Integer& n, const Integer& start,
                             const Budget& budget) {
  if (n < Integer(1)) throw PreconditionError("prime_in_progression: modulus must be >= 1");
  if (!Integer::gcd(a, n).is_unit()) {
    throw PreconditionError("prime_in_progression: gcd(" + a.str() + ", " + n.str() + ") != 1");
  }
  Integer candidate = start < Integer(2) ? Integer(2) : start;
  candidate = candidate + Integer::mod_floor(a - candidate, n);
  const Integer limit(budget.prime_scan_limit);
  for (; candidate <= limit; candidate += n) {
    if (candidate >= Integer(2) && is_prime(candidate)) return candidate;
  }
  throw BudgetExceeded("prime_in_progression: no prime = " + a.str() + " (mod " + n.str() +
                       ") below " + limit.str());
}

}  // namespace schinzel

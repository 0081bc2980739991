#pragma once

#include <utility>
#include <vector>

#include "schinzel/budget.hpp"
#include "schinzel/integer.hpp"

namespace schinzel {

struct Congruence {
  Integer residue;
  Integer modulus;  // nonzero
};

struct CrtResult {
  Integer value;  // 0 <= value < lcm
  Integer lcm;
};

/// Simultaneous solution of the congruences; moduli need not be pairwise
/// coprime. Throws IncompatibleCongruences when two of them conflict on a
/// shared prime power.
CrtResult crt(const std::vector<Congruence>& congruences);

/// Primality of |n|. Miller-Rabin over the witness set {2,...,41} is
/// deterministic below 3.3e24; larger inputs get 40 extra pseudo-random
/// rounds.
bool is_prime(const Integer& n);

struct FactoredInteger {
  int unit = 1;  // sign of the input
  std::vector<std::pair<Integer, unsigned>> factors;  // primes strictly increasing

  Integer reconstruct() const;
};

/// Full factorization of n != 0 by trial division then Pollard rho (Brent).
/// Throws BudgetExceeded when a composite cofactor survives both stages.
FactoredInteger factorize(const Integer& n, const Budget& budget = Budget::defaults());

/// All positive divisors of |n|, ascending.
std::vector<Integer> divisors(const FactoredInteger& f);

/// Least prime p >= start with p = a (mod n); requires gcd(a, n) = 1, n >= 1.
Integer prime_in_progression(const Integer& a, const Integer& n, const Integer& start,
                             const Budget& budget = Budget::defaults());

}  // namespace schinzel

#pragma once

#include <utility>
#include <vector>

#include "schinzel/budget.hpp"
#include "schinzel/poly.hpp"

namespace schinzel {

/// unit * prod(factors[i]^e_i) reconstructs the input exactly. Factors are
/// monic over fields and positive-lead primitive over Z, sorted canonically.
struct Factorization {
  Value unit;
  std::vector<std::pair<Poly, unsigned>> factors;

  Poly reconstruct(const std::string& var) const;
  bool is_irreducible() const {
    return factors.size() == 1 && factors[0].second == 1 && unit.is_unit();
  }
};

/// Complete factorization over F_p by exhaustive trial division with monic
/// polynomials of degree <= deg/2, smallest degrees first.
Factorization factor_over_prime_field(const Poly& p, const Budget& budget = Budget::defaults());

/// Complete factorization over Z by Kronecker interpolation: evaluate at
/// deg/2 + 1 small points, enumerate divisor combinations of the values,
/// interpolate candidate factors over Q and keep the ones dividing exactly.
Factorization kronecker_factor(const Poly& p, const Budget& budget = Budget::defaults());

/// Irreducible over the ring Z: a prime constant, or a primitive polynomial
/// that kronecker_factor certifies Q-irreducible.
bool is_irreducible_over_z(const Poly& p, const Budget& budget = Budget::defaults());

}  // namespace schinzel

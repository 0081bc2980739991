#pragma once

// Test-only oracles, deliberately independent of the library's computation
// paths: sieve-based primality, Sylvester-determinant resultants via Bareiss
// elimination, and a direct exhaustive factor search over Z.

#include <vector>

#include "schinzel/poly.hpp"

namespace schinzel::oracle {

/// sieve[i] == true iff i is prime, for 0 <= i <= n.
std::vector<bool> prime_sieve(long n);

/// Resultant as the determinant of the Sylvester matrix, computed by
/// fraction-free Bareiss elimination over the coefficient ring.
Value sylvester_resultant(const Poly& a, const Poly& b);

/// Exhaustive search for a factor of degree exactly d of a primitive
/// integer polynomial: divisor tuples at d+1 points, rational Lagrange
/// interpolation, exact division. Plain loops, no recursion, no minimal-
/// degree shortcuts.
bool has_factor_of_degree(const Poly& primitive, int d);

/// No factor of degree 1..deg/2 exists (primitive input).
bool irreducible_primitive_z(const Poly& primitive);

}  // namespace schinzel::oracle

#pragma once

#include <optional>
#include <vector>

#include "schinzel/av.hpp"
#include "schinzel/budget.hpp"
#include "schinzel/poly.hpp"

namespace schinzel {

/// The ring-appropriate "values share no divisor" verification. Over Z and
/// F_p[u] the gcd of values must be a unit; over Z[u] the gcd over Q[u] must
/// be constant AND the integer contents must be coprime (together: no
/// common prime divisor in Z[u]).
struct ValueGcdReport {
  Value gcd;                                // gcd of values in Z (or over Q[u] for Z[u])
  std::optional<Integer> integer_content;   // Z[u] only: gcd of integer contents
  bool coprime = false;
};

struct CoprimeWitness {
  Value m;
  std::vector<Value> values;
  ValueGcdReport verification;
};

/// Runs the verification on an arbitrary value tuple; this is the single
/// checker every finder and the brute-force oracle share.
ValueGcdReport verify_coprime_values(const RingPtr& ring, const std::vector<Value>& values);

/// Theorem case (a), Z in {Z, F_p[u]}: per-prime residue scan for every
/// prime dividing delta, combined by CRT. Throws AvViolation when a prime
/// kills every residue.
CoprimeWitness find_coprime_pid(const std::vector<Poly>& ps,
                                const Budget& budget = Budget::defaults());

/// Theorem case (b) with Q[u] as the exemplar UFD containing an infinite
/// field: scans constants m in Q; termination within
/// sum(deg_y reductions) + 1 candidates is asserted.
CoprimeWitness find_coprime_infinite_field(const std::vector<Poly>& ps,
                                           const Budget& budget = Budget::defaults());

/// Theorem case (c), Z = Z[u]: structured candidates
/// m(u) = l0 + l1*u^(d+1) + l2*u^(d+2) with l2 = 1 (mod l1), verified
/// directly; exhaustive enumeration by degree and height as a fallback.
CoprimeWitness find_coprime_polyring(const std::vector<Poly>& ps,
                                     const Budget& budget = Budget::defaults());

/// Search box for the brute-force oracle: an interval of Z, or a
/// degree(/height) box of F_p[u] / Z[u].
struct SearchBox {
  Integer lo, hi;        // Z: inclusive interval
  int max_degree = 0;    // F_p[u], Z[u]
  long max_height = 0;   // Z[u]

  static SearchBox interval(Integer lo, Integer hi);
  static SearchBox poly_box(int max_degree, long max_height = 0);
};

/// Exhaustive first-in-box scan (the oracle all constructive finders are
/// tested against); deterministic order, no cleverness.
std::optional<CoprimeWitness> brute_force_coprime(const std::vector<Poly>& ps,
                                                  const SearchBox& box,
                                                  const Budget& budget = Budget::defaults());

}  // namespace schinzel

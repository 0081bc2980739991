#pragma once

#include <optional>
#include <vector>

#include "schinzel/budget.hpp"
#include "schinzel/poly.hpp"

namespace schinzel {

/// Evidence from scanning one prime of Z: either every residue annihilated
/// all the polynomials, or some residue survived.
struct ResidueScanRecord {
  Value prime;
  bool all_residues_annihilate = false;
  std::optional<Value> surviving_residue;
  std::optional<std::size_t> surviving_index;
};

struct AvVerdict {
  bool holds = false;
  std::optional<Value> failing_prime;          // present and verified when !holds
  std::vector<ResidueScanRecord> evidence;      // residue scans (Z, F_p[u])
  std::optional<Value> content_witness;         // coefficient gcd (Z[u], Q[u])
};

/// Assumption on Values (AV2): no prime of Z divides the whole value tuple
/// P_1(m),...,P_s(m) for every m in Z. Over Z the primes dividing delta are
/// scanned residue by residue; over F_p[u] the residues of F_p[u]/(pi) for
/// every irreducible pi | delta; over Z[u] and Q[u] the residue property
/// turns the check into a coefficient-content test.
AvVerdict check_av2(const std::vector<Poly>& ps, const Budget& budget = Budget::defaults());

/// Assumption on Values (AV1): the same question for the product of the
/// P_i; accepts s >= 1. Over Z the candidate primes are those <= deg of the
/// product plus the prime divisors of its content (larger primes cannot
/// annihilate every residue); over F_p[u] the irreducibles pi with
/// p^deg(pi) <= deg of the product plus the divisors of its content.
AvVerdict check_av1(const std::vector<Poly>& ps, const Budget& budget = Budget::defaults());

/// Residue scan for a single prime, shared by the AV checkers and the
/// witness finders. `prime` is an integer prime (inputs over Z) or an
/// irreducible element of F_p[u] (inputs over F_p[u]). A residue killing
/// every input is a common root of the nonzero reductions, so a survivor
/// appears within min-degree + 1 candidates; the scan is complete without
/// enumerating large residue fields.
ResidueScanRecord scan_prime(const std::vector<Poly>& ps, const Value& prime);

}  // namespace schinzel

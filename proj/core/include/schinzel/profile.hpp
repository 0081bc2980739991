#pragma once

#include <vector>

#include "schinzel/budget.hpp"
#include "schinzel/poly.hpp"
#include "schinzel/rational.hpp"

namespace schinzel {

/// The period-delta table m -> d_m = gcd(P_1(m),...,P_s(m)), normalized
/// modulo units. d_m | delta for every entry and d_m = d_{m + l*delta}.
struct GcdProfile {
  Value delta;
  std::vector<std::pair<Value, Value>> table;  // (residue, d_m) over one full period
};

/// Full-period gcd table over Z or F_p[u]; periodicity is spot-checked at
/// l in {-2,-1,1,2} on sampled residues.
GcdProfile gcd_profile(const std::vector<Poly>& ps, const Budget& budget = Budget::defaults());

/// The set D* of value-gcds over one period with its gcd d*. Stability
/// under gcd and d* membership are asserted; av2_holds reports the checker
/// verdict (d* is a unit iff AV2 holds).
struct DStar {
  std::vector<Value> divisors;
  Value d_star;
  bool av2_holds = false;
};

DStar dstar(const std::vector<Poly>& ps, const Budget& budget = Budget::defaults());

/// Exact proportion of m in [lo, hi) whose values share no divisor; the
/// window length must be a positive multiple of |delta|.
Rational density_good_m(const std::vector<Poly>& ps, const Integer& lo, const Integer& hi,
                        const Budget& budget = Budget::defaults());

}  // namespace schinzel

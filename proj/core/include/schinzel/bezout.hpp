#pragma once

#include <optional>
#include <vector>

#include "schinzel/budget.hpp"
#include "schinzel/poly.hpp"

namespace schinzel {

/// Cofactors V_1..V_s over the coefficient ring with sum(V_i * P_i) = delta,
/// a nonzero constant of the ring. The identity is re-checked when the
/// certificate is built, never assumed.
struct BezoutCertificate {
  std::vector<Poly> cofactors;
  Value delta;
};

/// Exact polynomial identity check sum(cofactors_i * ps_i) == delta.
bool verify_certificate(const BezoutCertificate& cert, const std::vector<Poly>& ps);

/// Builds a certificate by folding content-cleared extended gcds over
/// P_1..P_s. Requires s >= 2, all inputs nonzero, and no common divisor over
/// the fraction field (otherwise CommonFactorError). delta is
/// unit-normalized. For s = 2 over a PID the resultant is computed and
/// delta | Res(P_1, P_2) is asserted.
BezoutCertificate bezout_delta(const std::vector<Poly>& ps);

/// Generator of { constant values of sum(V_i P_i) : deg V_i <= degree_bound },
/// normalized; zero when only the zero constant is achievable at this bound.
/// Over Z the lattice of achievable coefficient vectors is put in Hermite
/// normal form and the constant-coordinate sublattice read off the last
/// pivot; over F_p[u] the analogous Euclidean row echelon is used.
Value minimal_delta_bounded(const std::vector<Poly>& ps, int degree_bound,
                            const Budget& budget = Budget::defaults());

struct DeltaResult {
  BezoutCertificate bezout;
  std::optional<Value> minimal_delta;
  int degree_bound_used = 0;
};

/// bezout_delta plus minimal_delta_bounded at the default bound
/// D = max(sum of input degrees, largest certificate cofactor degree), which
/// guarantees minimal_delta | bezout.delta.
DeltaResult delta_analysis(const std::vector<Poly>& ps, const Budget& budget = Budget::defaults());

}  // namespace schinzel

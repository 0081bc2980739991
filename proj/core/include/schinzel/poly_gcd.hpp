#pragma once

#include "schinzel/poly.hpp"

namespace schinzel {

/// Monic gcd for genuine field coefficients (Q, F_p), and the Gauss-lemma
/// gcd (content out, subresultant PRS on primitive parts, unit-normalized)
/// for UFD coefficients (Z, F_p[x], Z[x], Q[x]). gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

struct PolyExtGcd {
  Poly g;  // monic gcd
  Poly a;  // a*P + b*Q = g
  Poly b;
};

/// Extended Euclid over field coefficients; cofactors are degree-reduced:
/// deg a < deg Q - deg g, deg b < deg P - deg g when both inputs are nonzero.
PolyExtGcd ext_gcd_over_field(const Poly& p, const Poly& q);

struct ContentPrimitive {
  Value content;
  Poly primitive;
};

/// content * primitive = p with unit-content primitive part; content is
/// unit-normalized (positive over Z, monic over F_p[x]). (0, 0) for zero.
ContentPrimitive content_and_primitive(const Poly& p);

struct ClearedExtGcd {
  Poly g;  // a*P + b*Q = g; a base-ring multiple of the fraction-field gcd
  Poly a;
  Poly b;
};

/// Extended gcd computed with content-cleared pseudo-remainders, staying in
/// the coefficient ring throughout (the "fraction-field view" of a UFD).
/// When P and Q are coprime over the fraction field, g is a nonzero
/// constant.
ClearedExtGcd ext_gcd_cleared(const Poly& p, const Poly& q);

/// Resultant by the subresultant pseudo-remainder sequence (fraction-free);
/// matches the Sylvester-matrix determinant, sign included. Throws
/// PreconditionError on zero input.
Value resultant(const Poly& p, const Poly& q);

}  // namespace schinzel

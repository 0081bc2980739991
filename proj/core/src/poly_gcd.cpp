#include "schinzel/poly_gcd.hpp"

#include <tuple>

#include "schinzel/errors.hpp"

namespace schinzel {

namespace {

// Divide every coefficient by the canonical unit of the leading one
// (monic over fields, positive lead over Z, recursively normalized lead
// over nested rings).
Poly unit_normalize(const Poly& p) {
  if (p.is_zero()) return p;
  Value u = p.lead().canonical_unit();
  if (u.is_one()) return p;
  std::vector<Value> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const Value& c : p.coeffs()) coeffs.push_back(Value::divexact(c, u));
  return Poly::from_coeffs(p.coeff_ring(), p.var(), std::move(coeffs));
}

Poly scale_down(const Poly& p, const Value& d) {
  if (d.is_one()) return p;
  std::vector<Value> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const Value& c : p.coeffs()) coeffs.push_back(Value::divexact(c, d));
  return Poly::from_coeffs(p.coeff_ring(), p.var(), std::move(coeffs));
}

Poly gcd_field_euclid(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly r2 = poly_divmod(r0, r1).remainder;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return unit_normalize(r0);
}

}  // namespace

ContentPrimitive content_and_primitive(const Poly& p) {
  const RingPtr& base = p.coeff_ring();
  if (!base->supports_gcd()) {
    throw RingMismatchError("content: no gcd over " + base->describe());
  }
  if (p.is_zero()) return {Value::zero(base), p};
  Value content = Value::zero(base);
  for (const Value& c : p.coeffs()) content = Value::gcd(content, c);
  return {content, scale_down(p, content)};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (!ring_equal(a.coeff_ring(), b.coeff_ring())) {
    throw RingMismatchError("poly_gcd: coefficient rings differ");
  }
  const RingPtr& base = a.coeff_ring();
  if (!base->supports_gcd()) throw RingMismatchError("poly_gcd: no gcd over " + base->describe());
  if (a.is_zero() && b.is_zero()) return a;
  if (base->is_field()) return gcd_field_euclid(a, b);

  // Gauss's lemma: contents out, primitive PRS on the rest.
  ContentPrimitive ca = content_and_primitive(a);
  ContentPrimitive cb = content_and_primitive(b);
  Value c = Value::gcd(ca.content, cb.content);
  Poly big = ca.primitive, small = cb.primitive;
  if (big.degree() < small.degree()) std::swap(big, small);
  while (!small.is_zero()) {
    Poly r = poly_pseudo_divmod(big, small).remainder;
    big = std::move(small);
    small = r.is_zero() ? r : content_and_primitive(r).primitive;
  }
  Poly prim = unit_normalize(big);
  return prim.scaled(Value::convert(c, base));
}

PolyExtGcd ext_gcd_over_field(const Poly& p, const Poly& q) {
  if (!ring_equal(p.coeff_ring(), q.coeff_ring())) {
    throw RingMismatchError("ext_gcd_over_field: coefficient rings differ");
  }
  const RingPtr& ring = p.coeff_ring();
  if (!ring->is_field()) {
    throw PreconditionError("ext_gcd_over_field: coefficients must form a field");
  }
  const std::string& var = p.var();
  Poly zero(ring, var);
  Poly one = Poly::constant(ring, var, Value::one(ring));
  if (p.is_zero() && q.is_zero()) return {zero, zero, zero};
  if (q.is_zero() || p == q) {
    Value inv = Value::inverse(p.lead());
    return {p.scaled(inv), Poly::constant(ring, var, inv), zero};
  }
  if (p.is_zero()) {
    Value inv = Value::inverse(q.lead());
    return {q.scaled(inv), zero, Poly::constant(ring, var, inv)};
  }

  Poly r0 = p, s0 = one, t0 = zero;
  Poly r1 = q, s1 = zero, t1 = one;
  while (!r1.is_zero()) {
    PolyDivMod dm = poly_divmod(r0, r1);
    Poly r2 = dm.remainder;
    Poly s2 = s0 - dm.quotient * s1;
    Poly t2 = t0 - dm.quotient * t1;
    r0 = std::move(r1); s0 = std::move(s1); t0 = std::move(t1);
    r1 = std::move(r2); s1 = std::move(s2); t1 = std::move(t2);
  }
  Value inv = Value::inverse(r0.lead());
  Poly g = r0.scaled(inv);
  Poly a = s0.scaled(inv);
  Poly b = t0.scaled(inv);
  // reduce the first cofactor below deg(q/g); recompute the second exactly
  Poly qg = poly_divexact(q, g);
  if (qg.degree() > 0 && a.degree() >= qg.degree()) {
    a = poly_divmod(a, qg).remainder;
    b = poly_divexact(g - a * p, q);
  }
  return {std::move(g), std::move(a), std::move(b)};
}

ClearedExtGcd ext_gcd_cleared(const Poly& p, const Poly& q) {
  if (!ring_equal(p.coeff_ring(), q.coeff_ring())) {
    throw RingMismatchError("ext_gcd_cleared: coefficient rings differ");
  }
  const RingPtr& ring = p.coeff_ring();
  if (!ring->supports_gcd()) {
    throw RingMismatchError("ext_gcd_cleared: no gcd over " + ring->describe());
  }
  const std::string& var = p.var();
  Poly zero(ring, var);
  Poly one = Poly::constant(ring, var, Value::one(ring));
  if (p.is_zero() && q.is_zero()) return {zero, zero, zero};
  if (q.is_zero()) return {p, one, zero};
  if (p.is_zero()) return {q, zero, one};

  struct Triple {
    Poly r, a, b;  // a*P + b*Q = d*r
    Value d;
  };
  Triple t0{p, one, zero, Value::one(ring)};
  Triple t1{q, zero, one, Value::one(ring)};
  if (t0.r.degree() < t1.r.degree()) std::swap(t0, t1);

  while (!t1.r.is_zero()) {
    PolyPseudoDiv pd = poly_pseudo_divmod(t0.r, t1.r);
    // scale*d1*(a0 P + b0 Q) - d0*quot*(a1 P + b1 Q) = d0*d1*rem
    Value f0 = pd.scale * t1.d;
    Poly a2 = t0.a.scaled(f0) - pd.quotient * t1.a.scaled(t0.d);
    Poly b2 = t0.b.scaled(f0) - pd.quotient * t1.b.scaled(t0.d);
    Value d2 = t0.d * t1.d;
    Poly r2 = pd.remainder;
    if (!r2.is_zero()) {
      ContentPrimitive cp = content_and_primitive(r2);
      r2 = cp.primitive;
      d2 = d2 * cp.content;
    }
    // strip the common content of the whole identity to tame growth
    Value k = d2;
    for (const Value& c : a2.coeffs()) k = Value::gcd(k, c);
    for (const Value& c : b2.coeffs()) k = Value::gcd(k, c);
    if (!k.is_zero() && !k.is_unit()) {
      a2 = scale_down(a2, k);
      b2 = scale_down(b2, k);
      d2 = Value::divexact(d2, k);
    }
    t0 = std::move(t1);
    t1 = Triple{std::move(r2), std::move(a2), std::move(b2), std::move(d2)};
  }
  // a0*P + b0*Q = d0*r0
  Poly g = t0.r.scaled(t0.d);
  return {std::move(g), std::move(t0.a), std::move(t0.b)};
}

Value resultant(const Poly& p, const Poly& q) {
  if (!ring_equal(p.coeff_ring(), q.coeff_ring())) {
    throw RingMismatchError("resultant: coefficient rings differ");
  }
  if (p.is_zero() || q.is_zero()) throw PreconditionError("resultant: zero input");
  const RingPtr& base = p.coeff_ring();
  const int m = p.degree();
  const int n = q.degree();
  if (m == 0 && n == 0) return Value::one(base);
  if (n == 0) return q.lead().pow(static_cast<unsigned long>(m));
  if (m == 0) return p.lead().pow(static_cast<unsigned long>(n));

  bool negate = false;
  Poly bigger = p, smaller = q;
  if (m < n) {
    std::swap(bigger, smaller);
    if ((m & 1) && (n & 1)) negate = !negate;
  }
  ContentPrimitive ca = content_and_primitive(bigger);
  ContentPrimitive cb = content_and_primitive(smaller);
  Value t = ca.content.pow(static_cast<unsigned long>(cb.primitive.degree())) *
            cb.content.pow(static_cast<unsigned long>(ca.primitive.degree()));
  Poly a = ca.primitive;
  Poly b = cb.primitive;
  Value g = Value::one(base);
  Value h = Value::one(base);
  while (b.degree() > 0) {
    const int da = a.degree();
    const int db = b.degree();
    const unsigned delta = static_cast<unsigned>(da - db);
    if ((da & 1) && (db & 1)) negate = !negate;
    Poly r = poly_pseudo_divmod(a, b).remainder;
    a = b;
    Value denom = g * h.pow(delta);
    b = r.is_zero() ? r : scale_down(r, denom);
    g = a.lead();
    if (delta >= 1) {
      h = delta == 1 ? g : Value::divexact(g.pow(delta), h.pow(delta - 1));
    }
  }
  if (b.is_zero()) return Value::zero(base);
  const unsigned da = static_cast<unsigned>(a.degree());
  Value res = da == 0 ? b.lead() : Value::divexact(b.lead().pow(da), h.pow(da - 1));
  res = res * t;
  return negate ? -res : res;
}

}  // namespace schinzel

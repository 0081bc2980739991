#include "schinzel/ring.hpp"

#include "schinzel/errors.hpp"
#include "schinzel/numtheory.hpp"
#include "schinzel/poly.hpp"

namespace schinzel {

const RingPtr& Ring::integers() {
  static const RingPtr r = [] {
    auto p = std::shared_ptr<Ring>(new Ring);
    p->kind_ = RingKind::Integers;
    return RingPtr(p);
  }();
  return r;
}

const RingPtr& Ring::rationals() {
  static const RingPtr r = [] {
    auto p = std::shared_ptr<Ring>(new Ring);
    p->kind_ = RingKind::Rationals;
    return RingPtr(p);
  }();
  return r;
}

RingPtr Ring::prime_field(const Integer& p) {
  if (!is_prime(p)) throw PreconditionError("prime_field: " + p.str() + " is not prime");
  auto r = std::shared_ptr<Ring>(new Ring);
  r->kind_ = RingKind::PrimeField;
  r->p_ = p.abs();
  return r;
}

RingPtr Ring::poly_ring(const RingPtr& base, std::string var) {
  if (base->poly_depth() >= 2) throw PreconditionError("poly_ring: nesting depth limited to 2");
  if (base->kind() == RingKind::Quotient) throw PreconditionError("poly_ring: quotient base unsupported");
  auto r = std::shared_ptr<Ring>(new Ring);
  r->kind_ = RingKind::PolyRing;
  r->base_ = base;
  r->var_ = std::move(var);
  return r;
}

RingPtr Ring::quotient(const RingPtr& poly_ring, const Poly& modulus) {
  if (poly_ring->kind() != RingKind::PolyRing) {
    throw PreconditionError("quotient: base must be a polynomial ring");
  }
  if (modulus.degree() < 1 || !modulus.lead().is_one()) {
    throw PreconditionError("quotient: modulus must be monic of degree >= 1");
  }
  if (!ring_equal(modulus.coeff_ring(), poly_ring->base())) {
    throw RingMismatchError("quotient: modulus lives over a different base");
  }
  auto r = std::shared_ptr<Ring>(new Ring);
  r->kind_ = RingKind::Quotient;
  r->base_ = poly_ring;
  r->var_ = poly_ring->var();
  r->modulus_ = std::make_shared<const Poly>(modulus);
  return r;
}

const Poly& Ring::modulus() const {
  if (kind_ != RingKind::Quotient) throw RingMismatchError("modulus: not a quotient ring");
  return *modulus_;
}

int Ring::poly_depth() const {
  switch (kind_) {
    case RingKind::PolyRing: return 1 + base_->poly_depth();
    case RingKind::Quotient: return base_->poly_depth();
    default: return 0;
  }
}

bool Ring::supports_gcd() const {
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return true;
    case RingKind::PolyRing:
      return base_->supports_gcd();
    case RingKind::Quotient:
      return false;
  }
  return false;
}

std::string Ring::describe() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::PrimeField: return "F" + p_.str();
    case RingKind::PolyRing: return base_->describe() + "[" + var_ + "]";
    case RingKind::Quotient:
      return base_->describe() + "/(" + modulus_->str() + ")";
  }
  return "?";
}

bool ring_equal(const Ring& a, const Ring& b) {
  if (&a == &b) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return true;
    case RingKind::PrimeField:
      return a.prime() == b.prime();
    case RingKind::PolyRing:
      return a.var() == b.var() && ring_equal(a.base(), b.base());
    case RingKind::Quotient:
      return ring_equal(a.base(), b.base()) && a.modulus() == b.modulus();
  }
  return false;
}

bool ring_equal(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return ring_equal(*a, *b);
}

}  // namespace schinzel

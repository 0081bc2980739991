#include "schinzel/value.hpp"

#include <algorithm>

#include "schinzel/errors.hpp"
#include "schinzel/poly.hpp"
#include "schinzel/poly_gcd.hpp"

namespace schinzel {

namespace {

void check_same_ring(const Value& a, const Value& b, const char* op) {
  if (!ring_equal(a.ring(), b.ring())) {
    throw RingMismatchError(std::string(op) + ": operands in different rings (" +
                            a.ring()->describe() + " vs " + b.ring()->describe() + ")");
  }
}

bool poly_kind(const RingPtr& r) {
  return r->kind() == RingKind::PolyRing || r->kind() == RingKind::Quotient;
}

// The base scalars of a polynomial-flavored ring's payload.
const RingPtr& payload_base(const RingPtr& r) {
  return r->kind() == RingKind::Quotient ? r->base()->base() : r->base();
}

}  // namespace

Value Value::zero(const RingPtr& r) {
  Value v;
  v.ring_ = r;
  switch (r->kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
      v.z_ = Integer(0);
      break;
    case RingKind::Rationals:
      v.q_ = Rational(0);
      break;
    case RingKind::PolyRing:
    case RingKind::Quotient:
      break;  // empty coefficient vector
  }
  return v;
}

Value Value::one(const RingPtr& r) { return of_integer(r, Integer(1)); }

Value Value::of_integer(const RingPtr& r, const Integer& n) {
  Value v;
  v.ring_ = r;
  switch (r->kind()) {
    case RingKind::Integers:
      v.z_ = n;
      break;
    case RingKind::Rationals:
      v.q_ = Rational(n);
      break;
    case RingKind::PrimeField:
      v.z_ = Integer::mod_floor(n, r->prime());
      break;
    case RingKind::PolyRing: {
      Value c = of_integer(r->base(), n);
      if (!c.is_zero()) v.c_.push_back(std::move(c));
      break;
    }
    case RingKind::Quotient: {
      Value c = of_integer(payload_base(r), n);
      if (!c.is_zero()) v.c_.push_back(std::move(c));
      break;
    }
  }
  return v;
}

Value Value::of_rational(const Rational& q) {
  Value v;
  v.ring_ = Ring::rationals();
  v.q_ = q;
  return v;
}

Value Value::of_poly(const RingPtr& r, const Poly& p) {
  if (!poly_kind(r)) throw RingMismatchError("of_poly: " + r->describe() + " is not polynomial");
  const RingPtr& base = payload_base(r);
  if (!ring_equal(p.coeff_ring(), base)) {
    throw RingMismatchError("of_poly: coefficients live in " + p.coeff_ring()->describe() +
                            ", expected " + base->describe());
  }
  Poly reduced = p;
  if (r->kind() == RingKind::Quotient) {
    reduced = poly_divmod(p, r->modulus()).remainder;
  }
  Value v;
  v.ring_ = r;
  v.c_ = reduced.coeffs();
  return v;
}

bool Value::is_zero() const {
  switch (ring_->kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
      return z_.is_zero();
    case RingKind::Rationals:
      return q_.is_zero();
    default:
      return c_.empty();
  }
}

bool Value::is_one() const {
  switch (ring_->kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
      return z_.is_one();
    case RingKind::Rationals:
      return q_.is_one();
    default:
      return c_.size() == 1 && c_[0].is_one();
  }
}

bool Value::is_unit() const {
  switch (ring_->kind()) {
    case RingKind::Integers:
      return z_.is_unit();
    case RingKind::Rationals:
      return !q_.is_zero();
    case RingKind::PrimeField:
      return !z_.is_zero();
    case RingKind::PolyRing:
      return c_.size() == 1 && c_[0].is_unit();
    case RingKind::Quotient: {
      if (c_.empty()) return false;
      Poly g = poly_gcd(as_poly(), ring_->modulus());
      return g.is_constant();
    }
  }
  return false;
}

const Integer& Value::as_integer() const {
  if (ring_->kind() != RingKind::Integers && ring_->kind() != RingKind::PrimeField) {
    throw RingMismatchError("as_integer: value lives in " + ring_->describe());
  }
  return z_;
}

const Rational& Value::as_rational() const {
  if (ring_->kind() != RingKind::Rationals) {
    throw RingMismatchError("as_rational: value lives in " + ring_->describe());
  }
  return q_;
}

Poly Value::as_poly() const {
  if (!poly_kind(ring_)) throw RingMismatchError("as_poly: value lives in " + ring_->describe());
  Poly p(payload_base(ring_), ring_->var());
  p.c_ = c_;
  return p;
}

bool Value::is_constant_poly() const {
  if (!poly_kind(ring_)) return true;
  return c_.size() <= 1;
}

Value operator+(const Value& a, const Value& b) {
  check_same_ring(a, b, "add");
  Value out = Value::zero(a.ring());
  switch (a.ring()->kind()) {
    case RingKind::Integers:
      out.z_ = a.z_ + b.z_;
      break;
    case RingKind::PrimeField:
      out.z_ = Integer::mod_floor(a.z_ + b.z_, a.ring()->prime());
      break;
    case RingKind::Rationals:
      out.q_ = a.q_ + b.q_;
      break;
    default: {
      out = Value::of_poly(a.ring(), a.as_poly() + b.as_poly());
      break;
    }
  }
  return out;
}

Value operator-(const Value& a, const Value& b) { return a + (-b); }

Value Value::operator-() const {
  Value out = Value::zero(ring_);
  switch (ring_->kind()) {
    case RingKind::Integers:
      out.z_ = -z_;
      break;
    case RingKind::PrimeField:
      out.z_ = Integer::mod_floor(-z_, ring_->prime());
      break;
    case RingKind::Rationals:
      out.q_ = -q_;
      break;
    default:
      out.c_.reserve(c_.size());
      for (const Value& v : c_) out.c_.push_back(-v);
      break;
  }
  return out;
}

Value operator*(const Value& a, const Value& b) {
  check_same_ring(a, b, "mul");
  Value out = Value::zero(a.ring());
  switch (a.ring()->kind()) {
    case RingKind::Integers:
      out.z_ = a.z_ * b.z_;
      break;
    case RingKind::PrimeField:
      out.z_ = Integer::mod_floor(a.z_ * b.z_, a.ring()->prime());
      break;
    case RingKind::Rationals:
      out.q_ = a.q_ * b.q_;
      break;
    default:
      out = Value::of_poly(a.ring(), a.as_poly() * b.as_poly());
      break;
  }
  return out;
}

bool operator==(const Value& a, const Value& b) {
  if (!ring_equal(a.ring(), b.ring())) return false;
  switch (a.ring()->kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
      return a.z_ == b.z_;
    case RingKind::Rationals:
      return a.q_ == b.q_;
    default:
      return a.c_ == b.c_;
  }
}

Value Value::pow(unsigned long e) const {
  Value acc = Value::one(ring_);
  Value base = *this;
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    e >>= 1UL;
    if (e > 0) base = base * base;
  }
  return acc;
}

bool Value::divides(const Value& d, const Value& a) {
  check_same_ring(d, a, "divides");
  if (d.is_zero()) return a.is_zero();
  switch (d.ring()->kind()) {
    case RingKind::Integers:
      return Integer::divides(d.z_, a.z_);
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return true;
    case RingKind::PolyRing:
      return poly_divides(d.as_poly(), a.as_poly());
    case RingKind::Quotient:
      throw RingMismatchError("divides: unsupported in quotient rings");
  }
  return false;
}

Value Value::divexact(const Value& a, const Value& d) {
  check_same_ring(a, d, "divexact");
  if (d.is_zero()) throw PreconditionError("divexact: division by zero");
  Value out = Value::zero(a.ring());
  switch (a.ring()->kind()) {
    case RingKind::Integers:
      out.z_ = Integer::divexact(a.z_, d.z_);
      break;
    case RingKind::Rationals:
      out.q_ = a.q_ / d.q_;
      break;
    case RingKind::PrimeField:
      return a * inverse(d);
    case RingKind::PolyRing:
      return of_poly(a.ring(), poly_divexact(a.as_poly(), d.as_poly()));
    case RingKind::Quotient:
      throw RingMismatchError("divexact: unsupported in quotient rings");
  }
  return out;
}

Value Value::gcd(const Value& a, const Value& b) {
  check_same_ring(a, b, "gcd");
  switch (a.ring()->kind()) {
    case RingKind::Integers: {
      Value out = Value::zero(a.ring());
      out.z_ = Integer::gcd(a.z_, b.z_);
      return out;
    }
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return (a.is_zero() && b.is_zero()) ? zero(a.ring()) : one(a.ring());
    case RingKind::PolyRing:
      return of_poly(a.ring(), poly_gcd(a.as_poly(), b.as_poly()));
    case RingKind::Quotient:
      throw RingMismatchError("gcd: unsupported in quotient rings");
  }
  return zero(a.ring());
}

Value Value::inverse(const Value& a) {
  if (a.is_zero()) throw PreconditionError("inverse: zero is not invertible");
  switch (a.ring()->kind()) {
    case RingKind::Rationals:
      return of_rational(a.q_.inverse());
    case RingKind::PrimeField: {
      ExtGcdResult e = ext_gcd(a.z_, a.ring()->prime());
      Value out = Value::zero(a.ring());
      out.z_ = Integer::mod_floor(e.x, a.ring()->prime());
      return out;
    }
    case RingKind::Integers:
      if (a.z_.is_unit()) return a;
      throw PreconditionError("inverse: " + a.z_.str() + " is not a unit of Z");
    case RingKind::PolyRing:
      if (a.is_unit()) {
        Value out = Value::zero(a.ring());
        out.c_.push_back(inverse(a.c_[0]));
        return out;
      }
      throw PreconditionError("inverse: not a unit of " + a.ring()->describe());
    default:
      throw RingMismatchError("inverse: unsupported in " + a.ring()->describe());
  }
}

Value Value::canonical_unit() const {
  switch (ring_->kind()) {
    case RingKind::Integers: {
      Value out = Value::one(ring_);
      if (z_.sign() < 0) out.z_ = Integer(-1);
      return out;
    }
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return is_zero() ? one(ring_) : *this;
    case RingKind::PolyRing: {
      if (c_.empty()) return one(ring_);
      Value lead_unit = c_.back().canonical_unit();
      Value out = Value::zero(ring_);
      out.c_.push_back(std::move(lead_unit));
      return out;
    }
    case RingKind::Quotient:
      return one(ring_);
  }
  return one(ring_);
}

Value Value::normalized() const {
  Value u = canonical_unit();
  if (u.is_one()) return *this;
  return divexact(*this, u);
}

int Value::compare(const Value& a, const Value& b) {
  check_same_ring(a, b, "compare");
  switch (a.ring()->kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
      return a.z_ < b.z_ ? -1 : (a.z_ == b.z_ ? 0 : 1);
    case RingKind::Rationals:
      return a.q_ < b.q_ ? -1 : (a.q_ == b.q_ ? 0 : 1);
    default: {
      if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
      for (std::size_t i = a.c_.size(); i-- > 0;) {
        int c = compare(a.c_[i], b.c_[i]);
        if (c != 0) return c;
      }
      return 0;
    }
  }
}

std::string Value::str() const {
  switch (ring_->kind()) {
    case RingKind::Integers:
    case RingKind::PrimeField:
      return z_.str();
    case RingKind::Rationals:
      return q_.str();
    default:
      return as_poly().str();
  }
}

Value Value::convert(const Value& v, const RingPtr& target) {
  if (ring_equal(v.ring_, target)) return v;
  switch (target->kind()) {
    case RingKind::Integers:
      if (v.ring_->kind() == RingKind::Rationals && v.q_.is_integer()) {
        return of_integer(target, v.q_.numerator());
      }
      break;
    case RingKind::Rationals:
      if (v.ring_->kind() == RingKind::Integers) return of_rational(Rational(v.z_));
      break;
    case RingKind::PrimeField:
      if (v.ring_->kind() == RingKind::Integers) return of_integer(target, v.z_);
      if (v.ring_->kind() == RingKind::Rationals) {
        Value den = of_integer(target, v.q_.denominator());
        if (den.is_zero()) {
          throw RingMismatchError("convert: denominator vanishes mod " + target->prime().str());
        }
        return of_integer(target, v.q_.numerator()) * inverse(den);
      }
      break;
    case RingKind::PolyRing: {
      if (v.ring_->kind() == RingKind::PolyRing && v.ring_->var() == target->var()) {
        Value out = Value::zero(target);
        out.c_.reserve(v.c_.size());
        for (const Value& coeff : v.c_) out.c_.push_back(convert(coeff, target->base()));
        while (!out.c_.empty() && out.c_.back().is_zero()) out.c_.pop_back();
        return out;
      }
      Value inner = convert(v, target->base());
      Value out = Value::zero(target);
      if (!inner.is_zero()) out.c_.push_back(std::move(inner));
      return out;
    }
    case RingKind::Quotient: {
      Value inner = convert(v, target->base());
      return of_poly(target, inner.as_poly());
    }
  }
  throw RingMismatchError("convert: no canonical map " + v.ring_->describe() + " -> " +
                          target->describe());
}

}  // namespace schinzel

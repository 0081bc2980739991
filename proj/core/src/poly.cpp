#include "schinzel/poly.hpp"

#include <sstream>

#include "schinzel/errors.hpp"

namespace schinzel {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::from_coeffs(RingPtr coeff_ring, std::string var, std::vector<Value> coeffs) {
  Poly p(coeff_ring, std::move(var));
  for (const Value& c : coeffs) {
    if (!ring_equal(c.ring(), coeff_ring)) {
      throw RingMismatchError("from_coeffs: coefficient in " + c.ring()->describe() +
                              ", expected " + coeff_ring->describe());
    }
  }
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

Poly Poly::constant(const RingPtr& coeff_ring, const std::string& var, const Value& c) {
  return from_coeffs(coeff_ring, var, {c});
}

Poly Poly::variable(const RingPtr& coeff_ring, const std::string& var) {
  return monomial(coeff_ring, var, Value::one(coeff_ring), 1);
}

Poly Poly::monomial(const RingPtr& coeff_ring, const std::string& var, const Value& c,
                    unsigned degree) {
  std::vector<Value> coeffs(degree + 1, Value::zero(coeff_ring));
  coeffs[degree] = c;
  return from_coeffs(coeff_ring, var, std::move(coeffs));
}

Value Poly::coeff(std::size_t i) const {
  if (i < c_.size()) return c_[i];
  return Value::zero(ring_);
}

const Value& Poly::lead() const {
  if (c_.empty()) throw PreconditionError("lead: zero polynomial");
  return c_.back();
}

namespace {

void check_compatible(const Poly& a, const Poly& b, const char* op) {
  if (!ring_equal(a.coeff_ring(), b.coeff_ring())) {
    throw RingMismatchError(std::string(op) + ": coefficient rings differ (" +
                            a.coeff_ring()->describe() + " vs " + b.coeff_ring()->describe() + ")");
  }
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  check_compatible(a, b, "poly add");
  Poly out(a.coeff_ring(), a.var());
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  out.c_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.c_.push_back(a.coeff(i) + b.coeff(i));
  out.trim();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
  Poly out(ring_, var_);
  out.c_.reserve(c_.size());
  for (const Value& v : c_) out.c_.push_back(-v);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_compatible(a, b, "poly mul");
  Poly out(a.coeff_ring(), a.var());
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Value::zero(a.coeff_ring()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
    }
  }
  out.trim();
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  return ring_equal(a.coeff_ring(), b.coeff_ring()) && a.c_ == b.c_;
}

Poly Poly::scaled(const Value& s) const {
  if (!ring_equal(s.ring(), ring_)) throw RingMismatchError("scaled: scalar ring mismatch");
  Poly out(ring_, var_);
  if (s.is_zero()) return out;
  out.c_.reserve(c_.size());
  for (const Value& v : c_) out.c_.push_back(v * s);
  out.trim();
  return out;
}

Poly Poly::shifted(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  Poly out(ring_, var_);
  out.c_.assign(k, Value::zero(ring_));
  out.c_.insert(out.c_.end(), c_.begin(), c_.end());
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly acc = Poly::constant(ring_, var_, Value::one(ring_));
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) acc = acc * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return acc;
}

Poly Poly::derivative() const {
  Poly out(ring_, var_);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    out.c_.push_back(c_[i] * Value::of_integer(ring_, Integer(static_cast<long>(i))));
  }
  out.trim();
  return out;
}

Value Poly::eval(const Value& m) const {
  if (!ring_equal(m.ring(), ring_)) {
    throw RingMismatchError("eval: point lives in " + m.ring()->describe() + ", expected " +
                            ring_->describe());
  }
  Value acc = Value::zero(ring_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * m + c_[i];
  return acc;
}

Value Poly::eval_in(const RingPtr& target, const Value& m) const {
  if (!ring_equal(m.ring(), target)) throw RingMismatchError("eval_in: point not in target ring");
  Value acc = Value::zero(target);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * m + Value::convert(c_[i], target);
  return acc;
}

Poly Poly::convert_coeffs(const RingPtr& target) const {
  Poly out(target, var_);
  out.c_.reserve(c_.size());
  for (const Value& v : c_) out.c_.push_back(Value::convert(v, target));
  out.trim();
  return out;
}

int Poly::compare(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    int c = Value::compare(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

namespace {

// How a coefficient shows up in a rendered term: sign pulled out for plain
// scalars, parentheses around composite payloads.
struct CoeffText {
  bool negative = false;
  std::string body;     // absolute value, "" when |coeff| == 1
  bool needs_star = false;
};

bool is_scalar_kind(const RingPtr& r) {
  return r->kind() == RingKind::Integers || r->kind() == RingKind::Rationals ||
         r->kind() == RingKind::PrimeField;
}

CoeffText coefficient_text(const Value& c) {
  CoeffText out;
  Value v = c;
  // unwrap constant towers (a constant of Z[u] prints as the integer)
  while (!is_scalar_kind(v.ring()) && v.is_constant_poly()) {
    Poly p = v.as_poly();
    if (p.is_zero()) {
      v = Value::zero(p.coeff_ring());
    } else {
      v = p.coeff(0);
    }
  }
  if (is_scalar_kind(v.ring())) {
    switch (v.ring()->kind()) {
      case RingKind::Integers: {
        const Integer& z = v.as_integer();
        out.negative = z.sign() < 0;
        Integer a = z.abs();
        if (!a.is_one()) {
          out.body = a.str();
          out.needs_star = true;
        }
        return out;
      }
      case RingKind::PrimeField: {
        const Integer& z = v.as_integer();
        if (!z.is_one()) {
          out.body = z.str();
          out.needs_star = true;
        }
        return out;
      }
      case RingKind::Rationals: {
        const Rational& q = v.as_rational();
        out.negative = q.sign() < 0;
        Rational a = q.sign() < 0 ? -q : q;
        if (!a.is_one()) {
          out.body = a.is_integer() ? a.str() : "(" + a.str() + ")";
          out.needs_star = true;
        }
        return out;
      }
      default:
        break;
    }
  }
  out.body = "(" + v.str() + ")";
  out.needs_star = true;
  return out;
}

}  // namespace

std::string Poly::str(bool descending) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](std::size_t i) {
    const Value& c = c_[i];
    if (c.is_zero()) return;
    CoeffText t = coefficient_text(c);
    if (first) {
      if (t.negative) os << "-";
      first = false;
    } else {
      os << (t.negative ? " - " : " + ");
    }
    std::string var_part;
    if (i == 1) {
      var_part = var_;
    } else if (i > 1) {
      var_part = var_ + "^" + std::to_string(i);
    }
    if (t.body.empty() && var_part.empty()) {
      os << "1";
    } else if (t.body.empty()) {
      os << var_part;
    } else if (var_part.empty()) {
      os << t.body;
    } else {
      os << t.body << (t.needs_star ? "*" : "") << var_part;
    }
  };
  if (descending) {
    for (std::size_t i = c_.size(); i-- > 0;) emit(i);
  } else {
    for (std::size_t i = 0; i < c_.size(); ++i) emit(i);
  }
  return os.str();
}

PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
  check_compatible(a, b, "poly divmod");
  if (b.is_zero()) throw PreconditionError("poly divmod: division by zero polynomial");
  const RingPtr& ring = a.coeff_ring();
  const bool monic = b.lead().is_one();
  Value inv_lead = Value::one(ring);
  if (!monic) {
    if (!ring->is_field() && !b.lead().is_unit()) {
      throw PreconditionError("poly divmod: leading coefficient not invertible");
    }
    inv_lead = Value::inverse(b.lead());
  }
  std::vector<Value> rem(a.coeffs());
  const int db = b.degree();
  std::vector<Value> quot;
  if (a.degree() >= db) quot.assign(a.degree() - db + 1, Value::zero(ring));
  for (int i = a.degree(); i >= db; --i) {
    Value top = rem[i];
    if (top.is_zero()) continue;
    Value c = monic ? top : top * inv_lead;
    quot[i - db] = c;
    for (int k = 0; k <= db; ++k) {
      rem[i - db + k] = rem[i - db + k] - c * b.coeff(k);
    }
  }
  PolyDivMod out{Poly::from_coeffs(ring, a.var(), std::move(quot)),
                 Poly::from_coeffs(ring, a.var(), std::move(rem))};
  return out;
}

PolyPseudoDiv poly_pseudo_divmod(const Poly& a, const Poly& b) {
  check_compatible(a, b, "pseudo divmod");
  if (b.is_zero()) throw PreconditionError("pseudo divmod: division by zero polynomial");
  const RingPtr& ring = a.coeff_ring();
  const Value d = b.lead();
  const int db = b.degree();
  if (a.degree() < db) {
    return {Poly(ring, a.var()), a, Value::one(ring)};
  }
  const unsigned steps = static_cast<unsigned>(a.degree() - db + 1);
  Poly q(ring, a.var());
  Poly r = a;
  unsigned applied = 0;
  while (!r.is_zero() && r.degree() >= db) {
    Poly t = Poly::monomial(ring, a.var(), r.lead(), static_cast<unsigned>(r.degree() - db));
    q = q.scaled(d) + t;
    r = r.scaled(d) - t * b;
    ++applied;
  }
  // pad so the identity uses exactly lead(b)^(deg a - deg b + 1)
  for (; applied < steps; ++applied) {
    q = q.scaled(d);
    r = r.scaled(d);
  }
  return {std::move(q), std::move(r), d.pow(steps)};
}

bool poly_divides(const Poly& d, const Poly& a) {
  check_compatible(d, a, "poly divides");
  if (d.is_zero()) return a.is_zero();
  if (a.is_zero()) return true;
  if (a.degree() < d.degree()) return false;
  std::vector<Value> rem(a.coeffs());
  const int db = d.degree();
  for (int i = a.degree(); i >= db; --i) {
    Value top = rem[i];
    if (top.is_zero()) continue;
    if (!Value::divides(d.lead(), top)) return false;
    Value c = Value::divexact(top, d.lead());
    for (int k = 0; k <= db; ++k) {
      rem[i - db + k] = rem[i - db + k] - c * d.coeff(k);
    }
  }
  for (const Value& v : rem) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Poly poly_divexact(const Poly& a, const Poly& d) {
  check_compatible(a, d, "poly divexact");
  if (d.is_zero()) throw PreconditionError("poly divexact: division by zero polynomial");
  if (a.is_zero()) return a;
  if (a.degree() < d.degree()) throw PreconditionError("poly divexact: not divisible (degree)");
  const RingPtr& ring = a.coeff_ring();
  std::vector<Value> rem(a.coeffs());
  const int db = d.degree();
  std::vector<Value> quot(a.degree() - db + 1, Value::zero(ring));
  for (int i = a.degree(); i >= db; --i) {
    Value top = rem[i];
    if (top.is_zero()) continue;
    if (!Value::divides(d.lead(), top)) throw PreconditionError("poly divexact: not divisible");
    Value c = Value::divexact(top, d.lead());
    quot[i - db] = c;
    for (int k = 0; k <= db; ++k) {
      rem[i - db + k] = rem[i - db + k] - c * d.coeff(k);
    }
  }
  for (const Value& v : rem) {
    if (!v.is_zero()) throw PreconditionError("poly divexact: nonzero remainder");
  }
  return Poly::from_coeffs(ring, a.var(), std::move(quot));
}

}  // namespace schinzel

#include "schinzel/bezout.hpp"

#include <algorithm>

#include "schinzel/errors.hpp"
#include "schinzel/int_matrix.hpp"
#include "schinzel/poly_gcd.hpp"

namespace schinzel {

namespace {

void validate_inputs(const std::vector<Poly>& ps) {
  if (ps.size() < 2) throw PreconditionError("bezout_delta: needs at least two polynomials");
  const RingPtr& ring = ps.front().coeff_ring();
  if (!ring->supports_gcd()) {
    throw RingMismatchError("bezout_delta: no gcd over " + ring->describe());
  }
  for (const Poly& p : ps) {
    if (p.is_zero()) throw PreconditionError("bezout_delta: zero polynomial in the input");
    if (!ring_equal(p.coeff_ring(), ring)) {
      throw RingMismatchError("bezout_delta: mixed coefficient rings");
    }
  }
}

bool is_pid_coefficients(const RingPtr& ring) {
  switch (ring->kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return true;
    case RingKind::PolyRing:
      return ring->base()->is_field();
    default:
      return false;
  }
}

Poly scale_down_poly(const Poly& p, const Value& u) {
  if (u.is_one()) return p;
  std::vector<Value> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const Value& c : p.coeffs()) coeffs.push_back(Value::divexact(c, u));
  return Poly::from_coeffs(p.coeff_ring(), p.var(), std::move(coeffs));
}

}  // namespace

bool verify_certificate(const BezoutCertificate& cert, const std::vector<Poly>& ps) {
  if (cert.cofactors.size() != ps.size() || ps.empty()) return false;
  const RingPtr& ring = ps.front().coeff_ring();
  if (!ring_equal(cert.delta.ring(), ring)) return false;
  Poly acc(ring, ps.front().var());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (!ring_equal(cert.cofactors[i].coeff_ring(), ring)) return false;
    acc = acc + cert.cofactors[i] * ps[i];
  }
  return acc == Poly::constant(ring, ps.front().var(), cert.delta);
}

BezoutCertificate bezout_delta(const std::vector<Poly>& ps) {
  validate_inputs(ps);
  const RingPtr& ring = ps.front().coeff_ring();
  const std::string& var = ps.front().var();

  Poly g = ps.front();
  std::vector<Poly> cofactors{Poly::constant(ring, var, Value::one(ring))};
  for (std::size_t i = 1; i < ps.size(); ++i) {
    ClearedExtGcd e = ext_gcd_cleared(g, ps[i]);
    for (Poly& c : cofactors) c = e.a * c;
    cofactors.push_back(e.b);
    g = e.g;
  }
  if (g.is_zero() || !g.is_constant()) {
    Poly witness = g.is_zero() ? g : content_and_primitive(g).primitive;
    throw CommonFactorError(witness.str());
  }

  BezoutCertificate cert{std::move(cofactors), g.constant_value()};
  Value unit = cert.delta.canonical_unit();
  if (!unit.is_one()) {
    cert.delta = Value::divexact(cert.delta, unit);
    for (Poly& c : cert.cofactors) c = scale_down_poly(c, unit);
  }
  if (!verify_certificate(cert, ps)) {
    throw Error("bezout_delta: internal identity check failed");
  }
  if (ps.size() == 2 && is_pid_coefficients(ring)) {
    Value rho = resultant(ps[0], ps[1]);
    if (!Value::divides(cert.delta, rho)) {
      throw Error("bezout_delta: delta does not divide the resultant");
    }
  }
  return cert;
}

namespace {

// Coefficient-vector rows of x^k * P_i, constant coefficient in the LAST
// column so the constant sublattice sits under the final pivot.
struct LatticeShape {
  std::size_t rows, cols;
  int max_deg;
};

LatticeShape lattice_shape(const std::vector<Poly>& ps, int degree_bound, const Budget& budget) {
  int max_deg = 0;
  for (const Poly& p : ps) max_deg = std::max(max_deg, p.degree());
  LatticeShape s{ps.size() * static_cast<std::size_t>(degree_bound + 1),
                 static_cast<std::size_t>(max_deg + degree_bound + 1),
                 max_deg + degree_bound};
  if (s.rows > static_cast<std::size_t>(budget.matrix_dim_cap) ||
      s.cols > static_cast<std::size_t>(budget.matrix_dim_cap)) {
    throw CapExceeded("minimal_delta_bounded: lattice dimensions exceed the cap");
  }
  return s;
}

Value minimal_delta_z(const std::vector<Poly>& ps, int degree_bound, const Budget& budget) {
  LatticeShape shape = lattice_shape(ps, degree_bound, budget);
  IntMatrix m(shape.rows, shape.cols);
  std::size_t row = 0;
  for (const Poly& p : ps) {
    for (int k = 0; k <= degree_bound; ++k, ++row) {
      for (int j = 0; j <= p.degree(); ++j) {
        // coefficient of x^(j + k), stored with constant term last
        m.at(row, shape.cols - 1 - static_cast<std::size_t>(j + k)) = p.coeff(j).as_integer();
      }
    }
  }
  HnfResult hnf = hermite_normal_form(m);
  for (std::size_t i = 0; i < shape.rows; ++i) {
    bool only_last = true;
    for (std::size_t j = 0; j + 1 < shape.cols && only_last; ++j) {
      only_last = hnf.h.at(i, j).is_zero();
    }
    if (only_last && !hnf.h.at(i, shape.cols - 1).is_zero()) {
      return Value::of_integer(Ring::integers(), hnf.h.at(i, shape.cols - 1));
    }
  }
  return Value::zero(Ring::integers());
}

Value minimal_delta_fp_u(const std::vector<Poly>& ps, int degree_bound, const Budget& budget) {
  const RingPtr& ring = ps.front().coeff_ring();  // F_p[u]
  LatticeShape shape = lattice_shape(ps, degree_bound, budget);
  std::vector<std::vector<Value>> m(shape.rows,
                                    std::vector<Value>(shape.cols, Value::zero(ring)));
  std::size_t row = 0;
  for (const Poly& p : ps) {
    for (int k = 0; k <= degree_bound; ++k, ++row) {
      for (int j = 0; j <= p.degree(); ++j) {
        m[row][shape.cols - 1 - static_cast<std::size_t>(j + k)] = p.coeff(j);
      }
    }
  }
  // Euclidean row echelon over the PID F_p[u]
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < shape.cols && pivot_row < shape.rows; ++col) {
    std::size_t found = pivot_row;
    while (found < shape.rows && m[found][col].is_zero()) ++found;
    if (found == shape.rows) continue;
    std::swap(m[pivot_row], m[found]);
    for (std::size_t i = pivot_row + 1; i < shape.rows; ++i) {
      if (m[i][col].is_zero()) continue;
      Poly a = m[pivot_row][col].as_poly();
      Poly b = m[i][col].as_poly();
      PolyExtGcd e = ext_gcd_over_field(a, b);
      Value ea = Value::of_poly(ring, e.a);
      Value eb = Value::of_poly(ring, e.b);
      Value ag = Value::of_poly(ring, poly_divexact(a, e.g));
      Value bg = Value::of_poly(ring, poly_divexact(b, e.g));
      for (std::size_t k = 0; k < shape.cols; ++k) {
        Value vp = m[pivot_row][k];
        Value vi = m[i][k];
        m[pivot_row][k] = ea * vp + eb * vi;
        m[i][k] = ag * vi - bg * vp;
      }
    }
    ++pivot_row;
  }
  for (std::size_t i = 0; i < shape.rows; ++i) {
    bool only_last = true;
    for (std::size_t j = 0; j + 1 < shape.cols && only_last; ++j) only_last = m[i][j].is_zero();
    if (only_last && !m[i][shape.cols - 1].is_zero()) {
      return m[i][shape.cols - 1].normalized();
    }
  }
  return Value::zero(ring);
}

}  // namespace

Value minimal_delta_bounded(const std::vector<Poly>& ps, int degree_bound, const Budget& budget) {
  validate_inputs(ps);
  if (degree_bound < 0) throw PreconditionError("minimal_delta_bounded: negative degree bound");
  const RingPtr& ring = ps.front().coeff_ring();
  // reject inputs with a common fraction-field factor up front
  Poly g = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) g = poly_gcd(g, ps[i]);
  if (g.degree() > 0) throw CommonFactorError(g.str());

  if (ring->kind() == RingKind::Integers) return minimal_delta_z(ps, degree_bound, budget);
  if (ring->kind() == RingKind::PolyRing && ring->base()->kind() == RingKind::PrimeField) {
    return minimal_delta_fp_u(ps, degree_bound, budget);
  }
  throw RingMismatchError("minimal_delta_bounded: supported over Z and F_p[u] only");
}

DeltaResult delta_analysis(const std::vector<Poly>& ps, const Budget& budget) {
  DeltaResult out{bezout_delta(ps), std::nullopt, 0};
  int bound = 0;
  for (const Poly& p : ps) bound += std::max(p.degree(), 0);
  for (const Poly& c : out.bezout.cofactors) bound = std::max(bound, c.degree());
  out.degree_bound_used = bound;
  const RingPtr& ring = ps.front().coeff_ring();
  if (ring->kind() == RingKind::Integers ||
      (ring->kind() == RingKind::PolyRing && ring->base()->kind() == RingKind::PrimeField)) {
    out.minimal_delta = minimal_delta_bounded(ps, bound, budget);
  }
  return out;
}

}  // namespace schinzel

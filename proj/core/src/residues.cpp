#include "schinzel/residues.hpp"

#include "schinzel/errors.hpp"

namespace schinzel {

namespace {

void check_cap(unsigned long count, const Budget& budget, const char* what) {
  if (count > static_cast<unsigned long>(budget.residue_cap)) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(count) +
                      " elements exceed the enumeration cap");
  }
}

unsigned long checked_pow(long base, int exp, const Budget& budget, const char* what) {
  unsigned long count = 1;
  for (int i = 0; i < exp; ++i) {
    count *= static_cast<unsigned long>(base);
    check_cap(count, budget, what);
  }
  return count;
}

}  // namespace

std::vector<Value> enumerate_residues(const RingPtr& ring, const Budget& budget) {
  std::vector<Value> out;
  if (ring->kind() == RingKind::PrimeField) {
    if (!ring->prime().fits_long()) throw CapExceeded("enumerate_residues: prime too large");
    long p = ring->prime().to_long();
    check_cap(static_cast<unsigned long>(p), budget, "enumerate_residues");
    out.reserve(p);
    for (long r = 0; r < p; ++r) out.push_back(Value::of_integer(ring, Integer(r)));
    return out;
  }
  if (ring->kind() == RingKind::Quotient) {
    const RingPtr& poly_ring = ring->base();
    const RingPtr& field = poly_ring->base();
    if (field->kind() != RingKind::PrimeField) {
      throw RingMismatchError("enumerate_residues: quotient base must be F_p[x]");
    }
    if (!field->prime().fits_long()) throw CapExceeded("enumerate_residues: prime too large");
    const long p = field->prime().to_long();
    const int deg = ring->modulus().degree();
    unsigned long count = checked_pow(p, deg, budget, "enumerate_residues");
    out.reserve(count);
    std::vector<long> digits(deg, 0);
    for (unsigned long n = 0; n < count; ++n) {
      std::vector<Value> coeffs;
      coeffs.reserve(deg);
      for (long d : digits) coeffs.push_back(Value::of_integer(field, Integer(d)));
      out.push_back(Value::of_poly(ring, Poly::from_coeffs(field, ring->var(), std::move(coeffs))));
      for (int i = 0; i < deg; ++i) {
        if (++digits[i] < p) break;
        digits[i] = 0;
      }
    }
    return out;
  }
  throw RingMismatchError("enumerate_residues: unsupported ring " + ring->describe());
}

std::vector<Value> first_residues(const RingPtr& ring, unsigned long count) {
  std::vector<Value> out;
  if (ring->kind() == RingKind::PrimeField) {
    Integer limit(static_cast<long>(count));
    if (ring->prime() < limit) limit = ring->prime();
    for (Integer r(0); r < limit; r += Integer(1)) out.push_back(Value::of_integer(ring, r));
    return out;
  }
  if (ring->kind() == RingKind::Quotient) {
    const RingPtr& poly_ring = ring->base();
    const RingPtr& field = poly_ring->base();
    if (field->kind() != RingKind::PrimeField) {
      throw RingMismatchError("first_residues: quotient base must be F_p[x]");
    }
    const long p = field->prime().to_long();
    const int deg = ring->modulus().degree();
    std::vector<long> digits(deg, 0);
    for (unsigned long n = 0; n < count; ++n) {
      std::vector<Value> coeffs;
      coeffs.reserve(deg);
      for (long d : digits) coeffs.push_back(Value::of_integer(field, Integer(d)));
      out.push_back(Value::of_poly(ring, Poly::from_coeffs(field, ring->var(), std::move(coeffs))));
      int i = 0;
      for (; i < deg; ++i) {
        if (++digits[i] < p) break;
        digits[i] = 0;
      }
      if (i == deg) break;  // wrapped: all p^deg residues emitted
    }
    return out;
  }
  throw RingMismatchError("first_residues: unsupported ring " + ring->describe());
}

std::vector<Value> enumerate_fp_polys(const RingPtr& fp_poly_ring, int max_degree,
                                      const Budget& budget) {
  if (fp_poly_ring->kind() != RingKind::PolyRing ||
      fp_poly_ring->base()->kind() != RingKind::PrimeField) {
    throw RingMismatchError("enumerate_fp_polys: expected F_p[x], got " +
                            fp_poly_ring->describe());
  }
  const RingPtr& field = fp_poly_ring->base();
  const long p = field->prime().to_long();
  checked_pow(p, max_degree + 1, budget, "enumerate_fp_polys");

  std::vector<Value> out;
  out.push_back(Value::zero(fp_poly_ring));
  for (int deg = 0; deg <= max_degree; ++deg) {
    std::vector<long> digits(deg + 1, 0);
    digits[deg] = 1;  // leading coefficient nonzero
    bool more = true;
    while (more) {
      std::vector<Value> coeffs;
      coeffs.reserve(deg + 1);
      for (long d : digits) coeffs.push_back(Value::of_integer(field, Integer(d)));
      out.push_back(Value::of_poly(
          fp_poly_ring, Poly::from_coeffs(field, fp_poly_ring->var(), std::move(coeffs))));
      int i = 0;
      for (; i <= deg; ++i) {
        long lo = (i == deg) ? 1 : 0;
        if (++digits[i] < p) break;
        digits[i] = lo;
      }
      more = i <= deg;
    }
  }
  return out;
}

std::vector<Value> enumerate_z_polys(const RingPtr& z_poly_ring, int max_degree, long max_height,
                                     const Budget& budget) {
  if (z_poly_ring->kind() != RingKind::PolyRing ||
      z_poly_ring->base()->kind() != RingKind::Integers) {
    throw RingMismatchError("enumerate_z_polys: expected Z[x], got " + z_poly_ring->describe());
  }
  const RingPtr& z = z_poly_ring->base();
  const long width = 2 * max_height + 1;
  checked_pow(width, max_degree + 1, budget, "enumerate_z_polys");

  std::vector<Value> out;
  out.push_back(Value::zero(z_poly_ring));
  if (max_height <= 0) return out;
  for (int deg = 0; deg <= max_degree; ++deg) {
    std::vector<long> digits(deg + 1, -max_height);
    bool more = true;
    while (more) {
      if (digits[deg] != 0) {  // leading coefficient nonzero
        std::vector<Value> coeffs;
        coeffs.reserve(deg + 1);
        for (long d : digits) coeffs.push_back(Value::of_integer(z, Integer(d)));
        out.push_back(Value::of_poly(
            z_poly_ring, Poly::from_coeffs(z, z_poly_ring->var(), std::move(coeffs))));
      }
      int i = 0;
      for (; i <= deg; ++i) {
        if (++digits[i] <= max_height) break;
        digits[i] = -max_height;
      }
      more = i <= deg;
    }
  }
  return out;
}

}  // namespace schinzel

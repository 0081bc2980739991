#pragma once

#include <initializer_list>
#include <vector>

#include "schinzel/poly.hpp"

namespace schinzel::testing {

// ascending coefficients over Z, variable y unless stated
inline Poly zp(std::initializer_list<long> asc, const char* var = "y") {
  std::vector<Value> coeffs;
  for (long c : asc) coeffs.push_back(Value::of_integer(Ring::integers(), Integer(c)));
  return Poly::from_coeffs(Ring::integers(), var, std::move(coeffs));
}

inline Poly qp(std::initializer_list<long> asc, const char* var = "y") {
  std::vector<Value> coeffs;
  for (long c : asc) coeffs.push_back(Value::of_integer(Ring::rationals(), Integer(c)));
  return Poly::from_coeffs(Ring::rationals(), var, std::move(coeffs));
}

inline RingPtr fpu(long p) { return Ring::poly_ring(Ring::prime_field(Integer(p)), "u"); }
inline RingPtr zu() { return Ring::poly_ring(Ring::integers(), "u"); }
inline RingPtr qu() { return Ring::poly_ring(Ring::rationals(), "u"); }
inline RingPtr zt() { return Ring::poly_ring(Ring::integers(), "t"); }

// element of a one-layer polynomial ring from ascending base coefficients
inline Value pv(const RingPtr& poly_ring, std::initializer_list<long> asc) {
  std::vector<Value> coeffs;
  for (long c : asc) coeffs.push_back(Value::of_integer(poly_ring->base(), Integer(c)));
  return Value::of_poly(poly_ring,
                        Poly::from_coeffs(poly_ring->base(), poly_ring->var(), std::move(coeffs)));
}

// polynomial in y over a one-layer polynomial ring; each entry is the
// ascending base-coefficient list of one y-coefficient
inline Poly nested(const RingPtr& poly_ring, std::initializer_list<std::initializer_list<long>> ys,
                   const char* var = "y") {
  std::vector<Value> coeffs;
  for (const auto& c : ys) coeffs.push_back(pv(poly_ring, c));
  return Poly::from_coeffs(poly_ring, var, std::move(coeffs));
}

inline Value zi(long n) { return Value::of_integer(Ring::integers(), Integer(n)); }

}  // namespace schinzel::testing

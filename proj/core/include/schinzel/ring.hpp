#pragma once

#include <memory>
#include <string>

#include "schinzel/integer.hpp"

namespace schinzel {

class Ring;
class Poly;
using RingPtr = std::shared_ptr<const Ring>;

enum class RingKind { Integers, Rationals, PrimeField, PolyRing, Quotient };

/// Descriptor of a coefficient ring from the supported menu: Z, Q, F_p,
/// R[x] over any of these, and F_p[x]/(f) with f monic of degree >= 1.
/// Polynomial-ring nesting is capped at depth 2, enough for R[u][t].
class Ring {
public:
  static const RingPtr& integers();
  static const RingPtr& rationals();
  static RingPtr prime_field(const Integer& p);
  static RingPtr poly_ring(const RingPtr& base, std::string var);
  static RingPtr quotient(const RingPtr& poly_ring, const Poly& modulus);

  RingKind kind() const { return kind_; }
  const Integer& prime() const { return p_; }
  const RingPtr& base() const { return base_; }
  const std::string& var() const { return var_; }
  const Poly& modulus() const;

  /// Q and F_p. (Quotient rings are only scanned, never inverted in.)
  bool is_field() const { return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField; }
  /// Number of PolyRing layers in the tower.
  int poly_depth() const;
  /// Rings where gcd/content arithmetic is available: Z, F_p[x], Z[x], Q[x], fields.
  bool supports_gcd() const;
  std::string describe() const;

private:
  Ring() = default;

  RingKind kind_ = RingKind::Integers;
  Integer p_;
  RingPtr base_;
  std::string var_;
  std::shared_ptr<const Poly> modulus_;
};

bool ring_equal(const Ring& a, const Ring& b);
bool ring_equal(const RingPtr& a, const RingPtr& b);

}  // namespace schinzel

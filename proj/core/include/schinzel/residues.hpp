#pragma once

#include <vector>

#include "schinzel/budget.hpp"
#include "schinzel/poly.hpp"

namespace schinzel {

/// Every residue of Z/(p) or F_p[x]/(f), each exactly once (p resp.
/// p^deg(f) elements). Throws CapExceeded past budget.residue_cap.
std::vector<Value> enumerate_residues(const RingPtr& ring,
                                      const Budget& budget = Budget::defaults());

/// The first min(count, ring size) residues in the same canonical order,
/// without touching the enumeration cap. Residue scans that only need a
/// surviving element use this instead of materializing the whole ring.
std::vector<Value> first_residues(const RingPtr& ring, unsigned long count);

/// All elements of F_p[x] of degree <= max_degree (including 0), in a fixed
/// order: by degree, then odometer on the coefficients. Elements of the
/// given PolyRing(F_p, x).
std::vector<Value> enumerate_fp_polys(const RingPtr& fp_poly_ring, int max_degree,
                                      const Budget& budget = Budget::defaults());

/// All elements of Z[x] of degree <= max_degree with |coefficients| <=
/// max_height, in a fixed order. Elements of the given PolyRing(Z, x).
std::vector<Value> enumerate_z_polys(const RingPtr& z_poly_ring, int max_degree,
                                     long max_height,
                                     const Budget& budget = Budget::defaults());

}  // namespace schinzel

#pragma once

#include <atomic>

#include "schinzel/rational.hpp"

namespace schinzel {

/// Effort bounds, passed by value into every search or factorization.
/// Searches that run out raise BudgetExceeded / CapExceeded instead of
/// degrading silently. Long scans poll interrupt_flag (when set) and flush
/// a partial report instead of finishing.
struct Budget {
  long trial_division_limit = 1'000'000;   // factorize: trial primes up to here
  long rho_iterations = 4'000'000;         // Pollard rho (Brent) steps per cofactor
  long prime_scan_limit = 50'000'000;      // prime_in_progression: largest candidate
  int kronecker_degree_cap = 8;            // kronecker_factor: max input degree
  long kronecker_combination_cap = 8'000'000;  // divisor tuples examined per split
  long fp_trial_cap = 4'000'000;           // monic trial divisors over F_p
  long residue_cap = 100'000;              // residues enumerated per quotient ring
  Integer profile_cap = Integer(1'000'000);  // |delta| cap for gcd profiles over Z
  int lambda_bound = 8;                    // structured polyring witness search box
  int fallback_degree_cap = 5;             // exhaustive polyring fallback: max deg m(u)
  int fallback_height_cap = 4;             // exhaustive polyring fallback: max |coeff|
  long scan_cap = 1'000;                   // hilbert specialization scans: |k| bound
  long matrix_dim_cap = 512;               // minimal_delta_bounded lattice size

  const std::atomic<bool>* interrupt_flag = nullptr;
  bool interrupted() const { return interrupt_flag && interrupt_flag->load(); }

  static Budget defaults() { return Budget{}; }

  /// Every cap multiplied by a positive rational, rounded down, floored at 1.
  Budget scaled_by(const Rational& factor) const;
};

}  // namespace schinzel

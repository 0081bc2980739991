#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "schinzel/integer.hpp"

namespace schinzel {

/// Dense matrix over Z, row-major; dimensions are at least 1x1.
class IntMatrix {
public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Integer(0)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("IntMatrix: zero dimension");
  }

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  void swap_rows(std::size_t i, std::size_t j);
  /// row_i <- x*row_i + y*row_j (in-place, i != j)
  void combine_rows(std::size_t i, std::size_t j, const Integer& x, const Integer& y);
  void negate_row(std::size_t i);
  /// row_i <- row_i - q*row_j
  void subtract_multiple(std::size_t i, std::size_t j, const Integer& q);

  /// Exact determinant of a square matrix (fraction-free Bareiss elimination).
  Integer determinant() const;

private:
  std::size_t rows_, cols_;
  std::vector<Integer> a_;
};

struct HnfResult {
  IntMatrix h;  // row-style Hermite normal form of m
  IntMatrix u;  // unimodular, h = u * m
};

/// Row-style HNF: echelon shape, positive pivots, entries above each pivot
/// reduced into [0, pivot).
HnfResult hermite_normal_form(const IntMatrix& m);

/// Shape predicate used by tests and assertions.
bool is_row_hnf(const IntMatrix& h);

}  // namespace schinzel

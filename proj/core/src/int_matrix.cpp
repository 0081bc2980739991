#include "schinzel/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace schinzel {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Integer(1);
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::combine_rows(std::size_t i, std::size_t j, const Integer& x, const Integer& y) {
  for (std::size_t k = 0; k < cols_; ++k) {
    at(i, k) = x * at(i, k) + y * at(j, k);
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::subtract_multiple(std::size_t i, std::size_t j, const Integer& q) {
  if (q.is_zero()) return;
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) -= q * at(j, k);
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
  IntMatrix m = *this;
  std::size_t n = rows_;
  Integer sign(1);
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m.at(swap_with, k).is_zero()) ++swap_with;
      if (swap_with == n) return Integer(0);
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m.at(i, j) = Integer::divexact(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
      }
      m.at(i, k) = Integer(0);
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

HnfResult hermite_normal_form(const IntMatrix& m) {
  HnfResult out{m, IntMatrix::identity(m.rows())};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    if (h.at(pivot_row, col).is_zero()) {
      std::size_t i = pivot_row + 1;
      while (i < rows && h.at(i, col).is_zero()) ++i;
      if (i == rows) continue;  // no pivot in this column
      h.swap_rows(pivot_row, i);
      u.swap_rows(pivot_row, i);
    }
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      if (h.at(i, col).is_zero()) continue;
      const Integer a = h.at(pivot_row, col);
      const Integer b = h.at(i, col);
      ExtGcdResult e = ext_gcd(a, b);
      const Integer a_g = Integer::divexact(a, e.g);
      const Integer b_g = Integer::divexact(b, e.g);
      // [[x, y], [-b/g, a/g]] has determinant (a*x + b*y)/g = 1
      for (std::size_t k = 0; k < cols; ++k) {
        Integer hp = h.at(pivot_row, k);
        Integer hi = h.at(i, k);
        h.at(pivot_row, k) = e.x * hp + e.y * hi;
        h.at(i, k) = a_g * hi - b_g * hp;
      }
      for (std::size_t k = 0; k < rows; ++k) {
        Integer up = u.at(pivot_row, k);
        Integer ui = u.at(i, k);
        u.at(pivot_row, k) = e.x * up + e.y * ui;
        u.at(i, k) = a_g * ui - b_g * up;
      }
    }
    if (h.at(pivot_row, col).sign() < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    const Integer pivot = h.at(pivot_row, col);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      // floor quotient keeps the reduced entry in [0, pivot)
      Integer r = Integer::mod_floor(h.at(i, col), pivot);
      Integer q = Integer::divexact(h.at(i, col) - r, pivot);
      h.subtract_multiple(i, pivot_row, q);
      u.subtract_multiple(i, pivot_row, q);
    }
    ++pivot_row;
  }
  return out;
}

bool is_row_hnf(const IntMatrix& h) {
  long last_pivot_col = -1;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    long pivot_col = -1;
    for (std::size_t j = 0; j < h.cols(); ++j) {
      if (!h.at(i, j).is_zero()) {
        pivot_col = static_cast<long>(j);
        break;
      }
    }
    if (pivot_col == -1) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;           // nonzero row below a zero row
    if (pivot_col <= last_pivot_col) return false;  // not echelon
    const Integer& pivot = h.at(i, pivot_col);
    if (pivot.sign() <= 0) return false;
    for (std::size_t k = 0; k < i; ++k) {
      const Integer& above = h.at(k, pivot_col);
      if (above.sign() < 0 || above >= pivot) return false;
    }
    last_pivot_col = pivot_col;
  }
  return true;
}

}  // namespace schinzel

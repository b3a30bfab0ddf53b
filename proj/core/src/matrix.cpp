#include "piradiance/matrix.hpp"

#include <utility>

#include "piradiance/errors.hpp"

namespace piradiance {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw LengthMismatch("ragged rows in matrix literal");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r] = (*this)(r, c);
  }
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

RationalMatrix RationalMatrix::select_columns(std::span<const std::size_t> cols) const {
  RationalMatrix s(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      s(r, k) = (*this)(r, cols[k]);
    }
  }
  return s;
}

std::vector<Rational> RationalMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) {
    throw LengthMismatch("matrix-vector size mismatch");
  }
  std::vector<Rational> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!x[c].is_zero()) {
        acc += (*this)(r, c) * x[c];
      }
    }
    y[r] = acc;
  }
  return y;
}

RowEchelon row_echelon(RationalMatrix m) {
  RowEchelon out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < m.rows() && m(found, col).is_zero()) {
      ++found;
    }
    if (found == m.rows()) {
      continue;
    }
    if (found != pivot_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::swap(m(found, c), m(pivot_row, c));
      }
    }
    const Rational inv = m(pivot_row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) {
      m(pivot_row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, col).is_zero()) {
        continue;
      }
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) -= factor * m(pivot_row, c);
      }
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t matrix_rank(const RationalMatrix& m) { return row_echelon(m).pivot_columns.size(); }

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) {
    throw LengthMismatch("determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t found = col;
    while (found < n && m(found, col).is_zero()) {
      ++found;
    }
    if (found == n) {
      return Rational(0);
    }
    if (found != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(found, c), m(col, c));
      }
      det = -det;
    }
    det *= m(col, col);
    const Rational inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) {
        continue;
      }
      const Rational factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) {
        m(r, c) -= factor * m(col, c);
      }
    }
  }
  return det;
}

std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) {
    throw LengthMismatch("right-hand side length differs from row count");
  }
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      aug(r, c) = a(r, c);
    }
    aug(r, a.cols()) = b[r];
  }
  const RowEchelon ech = row_echelon(std::move(aug));
  if (!ech.pivot_columns.empty() && ech.pivot_columns.back() == a.cols()) {
    return std::nullopt;
  }
  std::vector<Rational> x(a.cols());
  for (std::size_t k = 0; k < ech.pivot_columns.size(); ++k) {
    x[ech.pivot_columns[k]] = ech.reduced(k, a.cols());
  }
  return x;
}

}  // namespace piradiance

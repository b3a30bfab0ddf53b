#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "piradiance/rational.hpp"

namespace piradiance {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from nested rows; all rows must have equal length.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::vector<Rational> column(std::size_t c) const;
  [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] RationalMatrix transposed() const;
  /// Submatrix built from the given columns, in the given order.
  [[nodiscard]] RationalMatrix select_columns(std::span<const std::size_t> cols) const;
  /// Matrix-vector product; `x.size()` must equal cols().
  [[nodiscard]] std::vector<Rational> multiply(std::span<const Rational> x) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination over the rationals; pivots are taken left to right.
RowEchelon row_echelon(RationalMatrix m);

std::size_t matrix_rank(const RationalMatrix& m);

/// Determinant of a square matrix (throws LengthMismatch otherwise).
Rational determinant(RationalMatrix m);

/// One exact solution of A·x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& a, std::span<const Rational> b);

}  // namespace piradiance

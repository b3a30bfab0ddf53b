#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "piradiance/matrix.hpp"
#include "piradiance/rational.hpp"

namespace piradiance {

/// Ordered, user-declared set of fundamental-dimension labels.
///
/// The order is the row order of every dimensional matrix built over this
/// basis. Labels are arbitrary non-empty tokens without whitespace or '^'
/// (e.g. "L", "Θ", "Arbitrary").
class DimensionBasis {
 public:
  DimensionBasis() = default;
  explicit DimensionBasis(std::vector<std::string> labels);

  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view label) const;

  friend bool operator==(const DimensionBasis&, const DimensionBasis&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Rational exponent vector over a DimensionBasis.
class Dimension {
 public:
  Dimension() = default;
  explicit Dimension(std::vector<Rational> exponents) : exponents_(std::move(exponents)) {}
  /// The dimensionless element over a basis of the given size.
  static Dimension none(std::size_t basis_size) { return Dimension(std::vector<Rational>(basis_size)); }

  [[nodiscard]] std::size_t size() const noexcept { return exponents_.size(); }
  [[nodiscard]] const std::vector<Rational>& exponents() const noexcept { return exponents_; }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return exponents_[i]; }
  [[nodiscard]] bool is_dimensionless() const noexcept;

  [[nodiscard]] Dimension pow(const Rational& power) const;

  Dimension& operator*=(const Dimension& rhs);
  Dimension& operator/=(const Dimension& rhs);
  friend Dimension operator*(Dimension lhs, const Dimension& rhs) { return lhs *= rhs; }
  friend Dimension operator/(Dimension lhs, const Dimension& rhs) { return lhs /= rhs; }

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  std::vector<Rational> exponents_;
};

/// Parses a whitespace-separated product of `Label`, `Label^p` or
/// `Label^p/q` factors. Unmentioned labels get exponent zero; the empty
/// string is dimensionless.
///
/// Throws ParseError on an unknown label, a malformed exponent, or a label
/// repeated within one expression.
Dimension parse_dimension(std::string_view expr, const DimensionBasis& basis);

/// Inverse of parse_dimension: nonzero factors in basis order, exponent 1
/// omitted. Dimensionless renders as the empty string.
std::string render_dimension(const Dimension& dim, const DimensionBasis& basis);

struct Quantity {
  std::string name;    ///< identifier, unique within a QuantitySet
  std::string symbol;  ///< display form, e.g. "ν"
  Dimension dimension;
};

/// Ordered quantities sharing one basis; column order of G.
class QuantitySet {
 public:
  QuantitySet(DimensionBasis basis, std::vector<Quantity> quantities);

  [[nodiscard]] const DimensionBasis& basis() const noexcept { return basis_; }
  [[nodiscard]] const std::vector<Quantity>& quantities() const noexcept { return quantities_; }
  [[nodiscard]] const Quantity& quantity(std::size_t j) const { return quantities_.at(j); }
  /// κ, the number of quantities.
  [[nodiscard]] std::size_t size() const noexcept { return quantities_.size(); }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;

 private:
  DimensionBasis basis_;
  std::vector<Quantity> quantities_;
};

/// r × κ matrix whose entry (n, j) is the exponent of basis dimension n in quantity j.
RationalMatrix dimensional_matrix(const QuantitySet& qs);

/// Dimension of ∏ Q_j^{powers_j}. Zero exactly when the product is dimensionless.
Dimension dimension_of_product(const QuantitySet& qs, std::span<const Rational> powers);

}  // namespace piradiance

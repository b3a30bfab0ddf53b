#include "piradiance/dimension.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "piradiance/errors.hpp"

namespace piradiance {

DimensionBasis::DimensionBasis(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty() || label.find_first_of(" \t\n\r^") != std::string::npos) {
      throw ParseError("invalid dimension label '" + label + "'");
    }
    if (!seen.insert(label).second) {
      throw ParseError("duplicate dimension label '" + label + "'");
    }
  }
}

std::optional<std::size_t> DimensionBasis::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

bool Dimension::is_dimensionless() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](const Rational& e) { return e.is_zero(); });
}

Dimension Dimension::pow(const Rational& power) const {
  Dimension out = *this;
  for (auto& e : out.exponents_) {
    e *= power;
  }
  return out;
}

Dimension& Dimension::operator*=(const Dimension& rhs) {
  if (rhs.size() != size()) {
    throw LengthMismatch("dimensions over different bases");
  }
  for (std::size_t i = 0; i < size(); ++i) {
    exponents_[i] += rhs.exponents_[i];
  }
  return *this;
}

Dimension& Dimension::operator/=(const Dimension& rhs) {
  if (rhs.size() != size()) {
    throw LengthMismatch("dimensions over different bases");
  }
  for (std::size_t i = 0; i < size(); ++i) {
    exponents_[i] -= rhs.exponents_[i];
  }
  return *this;
}

Dimension parse_dimension(std::string_view expr, const DimensionBasis& basis) {
  std::vector<Rational> exps(basis.size());
  std::vector<bool> mentioned(basis.size(), false);
  std::istringstream in{std::string(expr)};
  std::string factor;
  while (in >> factor) {
    const auto caret = factor.find('^');
    const std::string label = factor.substr(0, caret);
    const auto idx = basis.index_of(label);
    if (!idx) {
      throw ParseError("unknown dimension label '" + label + "' in '" + std::string(expr) + "'");
    }
    if (mentioned[*idx]) {
      throw ParseError("dimension label '" + label + "' repeated in '" + std::string(expr) + "'");
    }
    mentioned[*idx] = true;
    if (caret == std::string::npos) {
      exps[*idx] = Rational(1);
    } else {
      const std::string power = factor.substr(caret + 1);
      try {
        exps[*idx] = Rational::parse(power);
      } catch (const DomainError&) {
        throw ParseError("malformed exponent '" + power + "'");
      } catch (const ParseError&) {
        throw ParseError("malformed exponent '" + power + "' for label '" + label + "'");
      }
    }
  }
  return Dimension(std::move(exps));
}

std::string render_dimension(const Dimension& dim, const DimensionBasis& basis) {
  if (dim.size() != basis.size()) {
    throw LengthMismatch("dimension does not match basis size");
  }
  std::string out;
  for (std::size_t i = 0; i < dim.size(); ++i) {
    if (dim[i].is_zero()) {
      continue;
    }
    if (!out.empty()) {
      out += ' ';
    }
    out += basis.label(i);
    if (dim[i] != Rational(1)) {
      out += '^';
      out += dim[i].to_string();
    }
  }
  return out;
}

QuantitySet::QuantitySet(DimensionBasis basis, std::vector<Quantity> quantities)
    : basis_(std::move(basis)), quantities_(std::move(quantities)) {
  if (quantities_.empty()) {
    throw DomainError("a quantity set needs at least one quantity");
  }
  std::set<std::string_view> names;
  for (auto& q : quantities_) {
    if (q.name.empty()) {
      throw ParseError("quantity with empty name");
    }
    if (!names.insert(q.name).second) {
      throw ParseError("duplicate quantity name '" + q.name + "'");
    }
    if (q.dimension.size() != basis_.size()) {
      throw LengthMismatch("quantity '" + q.name + "' has a dimension over a different basis");
    }
    if (q.symbol.empty()) {
      q.symbol = q.name;
    }
  }
}

std::optional<std::size_t> QuantitySet::index_of(std::string_view name) const {
  for (std::size_t j = 0; j < quantities_.size(); ++j) {
    if (quantities_[j].name == name) {
      return j;
    }
  }
  return std::nullopt;
}

RationalMatrix dimensional_matrix(const QuantitySet& qs) {
  RationalMatrix g(qs.basis().size(), qs.size());
  for (std::size_t j = 0; j < qs.size(); ++j) {
    const auto& exps = qs.quantity(j).dimension.exponents();
    for (std::size_t n = 0; n < exps.size(); ++n) {
      g(n, j) = exps[n];
    }
  }
  return g;
}

Dimension dimension_of_product(const QuantitySet& qs, std::span<const Rational> powers) {
  if (powers.size() != qs.size()) {
    throw LengthMismatch("expected " + std::to_string(qs.size()) + " powers, got " +
                         std::to_string(powers.size()));
  }
  Dimension out = Dimension::none(qs.basis().size());
  for (std::size_t j = 0; j < qs.size(); ++j) {
    if (!powers[j].is_zero()) {
      out *= qs.quantity(j).dimension.pow(powers[j]);
    }
  }
  return out;
}

}  // namespace piradiance

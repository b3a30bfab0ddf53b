#include "piradiance/presets.hpp"

#include <array>

namespace piradiance::presets {
namespace {

constexpr std::array<std::string_view, 3> kNames = {"rayleigh-jeans", "generalized", "jeans"};

struct Row {
  const char* name;
  const char* symbol;
  const char* dim;
};

QuantitySet build(const DimensionBasis& basis, std::span<const Row> rows) {
  std::vector<Quantity> quantities;
  quantities.reserve(rows.size());
  for (const Row& row : rows) {
    quantities.push_back({row.name, row.symbol, parse_dimension(row.dim, basis)});
  }
  return QuantitySet(basis, std::move(quantities));
}

constexpr Row kU{"U", "U", "L^-1 T^-1 M"};
constexpr Row kNu{"nu", "ν", "T^-1"};
constexpr Row kT{"T", "T", "Θ"};
constexpr Row kC{"c", "c", "L T^-1"};
constexpr Row kK{"k", "k", "L^2 Θ^-1 T^-2 M"};
constexpr Row kEta{"eta", "η", "L^2 T^-1 M"};

}  // namespace

DimensionBasis thermal_basis() { return DimensionBasis({"L", "Θ", "T", "M"}); }
DimensionBasis jeans_basis() { return DimensionBasis({"L", "Θ", "T", "M", "A"}); }

QuantitySet rayleigh_jeans_set() {
  const Row rows[] = {kU, kNu, kT, kC, kK};
  return build(thermal_basis(), rows);
}

QuantitySet generalized_set() {
  const Row rows[] = {kU, kNu, kT, kC, kK, kEta};
  return build(thermal_basis(), rows);
}

QuantitySet jeans_set() {
  const Row rows[] = {
      kU,
      {"lambda", "λ", "L"},
      kT,
      kC,
      {"e", "e", "L^3/2 T^-1 M^1/2 A^1/2"},
      {"m", "m", "M"},
      {"R", "R", "L^2 Θ^-1 T^-2 M"},
      {"K", "K", "A"},
  };
  return build(jeans_basis(), rows);
}

PinSpec rayleigh_jeans_pins() {
  PinSpec pins;
  pins.pin(0, 0, 1);
  return pins;
}

PinSpec generalized_pins(const Rational& n) {
  PinSpec pins;
  pins.pin(0, 0, 1);
  pins.pin(0, 5, n);
  pins.pin(1, 0, 0);
  pins.pin(1, 5, 1);
  return pins;
}

PinSpec jeans_pins() {
  PinSpec pins;
  pins.pin(0, 0, 1);
  pins.pin(0, 5, 0);
  pins.pin(0, 6, -1);
  pins.pin(1, 0, 0);
  pins.pin(1, 5, -1);
  pins.pin(1, 6, 1);
  pins.pin(2, 0, 0);
  pins.pin(2, 5, -2);
  pins.pin(2, 6, 1);
  return pins;
}

std::vector<Rational> jeans_exponent_functional() {
  return {Rational(-2), Rational(1), Rational(0), Rational(0), Rational(1, 2),
          Rational(0),  Rational(0), Rational(0)};
}

std::span<const std::string_view> names() { return kNames; }

std::optional<Preset> by_name(std::string_view name, const Rational& n) {
  if (name == "rayleigh-jeans") return Preset{std::string(name), rayleigh_jeans_set(), rayleigh_jeans_pins()};
  if (name == "generalized") return Preset{std::string(name), generalized_set(), generalized_pins(n)};
  if (name == "jeans") return Preset{std::string(name), jeans_set(), jeans_pins()};
  return std::nullopt;
}

}  // namespace piradiance::presets

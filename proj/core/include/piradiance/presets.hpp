#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "piradiance/dimension.hpp"
#include "piradiance/pi_solver.hpp"
#include "piradiance/rational.hpp"

namespace piradiance::presets {

/// (L, Θ, T, M): length, temperature, time, mass.
DimensionBasis thermal_basis();
/// (L, Θ, T, M, A), A being the arbitrary electrostatic dimension.
DimensionBasis jeans_basis();

/// U, ν, T, c, k.
QuantitySet rayleigh_jeans_set();
/// U, ν, T, c, k, η.
QuantitySet generalized_set();
/// U, λ, T, c, e, m, R, K.
QuantitySet jeans_set();

/// x_U = 1 for the single invariant.
PinSpec rayleigh_jeans_pins();
/// π₁: x_U = 1, x_η = N.  π₂: x_U = 0, x_η = 1.
PinSpec generalized_pins(const Rational& n);
/// π₁: x_U = 1, x_m = 0, x_R = −1.  π₂: x_U = 0, x_m = −1, x_R = 1.
/// π₃: x_U = 0, x_m = −2, x_R = 1.
PinSpec jeans_pins();

/// Coefficients of x_λ − 2x_U + x_e/2 over the Jeans quantities. It vanishes
/// on every non-dimensional power vector of the set, so x_λ = 2x_U whenever
/// x_e = 0 and no choice gives U ∝ λ⁻⁵ at fixed first power of U.
std::vector<Rational> jeans_exponent_functional();

/// "rayleigh-jeans", "generalized", "jeans".
std::span<const std::string_view> names();

struct Preset {
  std::string name;
  QuantitySet quantities;
  PinSpec pins;
};

/// Builds a named preset; N only affects "generalized". Returns nullopt for
/// an unknown name.
std::optional<Preset> by_name(std::string_view name, const Rational& n = Rational(-1));

}  // namespace piradiance::presets

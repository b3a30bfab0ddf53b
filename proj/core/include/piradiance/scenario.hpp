#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "piradiance/constants_fit.hpp"
#include "piradiance/dimension.hpp"
#include "piradiance/pi_solver.hpp"
#include "piradiance/radiation_laws.hpp"

namespace piradiance {

/// A quantity table with optional pins, read from
///
///   { "basis": ["L","Θ","T","M"],
///     "quantities": [{"name":"U","dim":"L^-1 T^-1 M","symbol":"U"}, ...],
///     "pins": [{"invariant":1,"quantity":"U","value":"1"}, ...] }
///
/// Invariant numbers in the file are one-based. Pin values are integers or
/// "p"/"p/q" strings. Without "pins" the invariants come from the nullspace.
struct DeriveScenario {
  QuantitySet quantities;
  std::optional<PinSpec> pins;
};

/// Throws ParseError for malformed JSON, missing fields or bad dimension text.
DeriveScenario parse_derive_scenario(std::string_view json_text);

struct GridSpec {
  double lo = 1e8;
  double hi = 1e12;
  std::size_t n = 512;
};

/// Parses "lo:hi:n". Throws ParseError.
GridSpec parse_grid(std::string_view text);

/// A law with explicit constants, read from
///
///   { "law": "planck", "k": 1.38e-23, "eta": 6.63e-34, "c": 2.99792458e8,
///     "grid": "1e8:1e12:512" }
///
/// Only "law" is required; missing constants fall back to the preset values.
/// Throws ParseError, or UnknownLaw for an unrecognised name.
struct LawScenario {
  RadiationLaw law;
  std::optional<GridSpec> grid;
};
LawScenario parse_law_scenario(std::string_view json_text);

/// { "sigma": 5.6696e-8, "C": 5.8787e10, "c": 2.99792458e8 }, every field optional.
FitInputs parse_fit_inputs(std::string_view json_text);

}  // namespace piradiance

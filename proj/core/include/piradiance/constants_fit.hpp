#pragma once

#include <string>
#include <vector>

#include "piradiance/radiation_laws.hpp"

namespace piradiance {

/// Observed radiation constants a fit starts from.
struct FitInputs {
  double sigma = 5.6696e-8;  ///< Stefan constant, J m⁻² s⁻¹ K⁻⁴
  double C = 5.8787e10;      ///< displacement constant ν_max/T, s⁻¹ K⁻¹
  double c = kSpeedOfLight;  ///< m/s
};

struct FittedConstants {
  double k = 0.0;    ///< J/K
  double eta = 0.0;  ///< J·s
  std::string law_name;

  [[nodiscard]] LawConstants constants() const { return {k, eta}; }
};

/// (k, η) for U with Φ = e^{−X} and displacement exponent N:
///   k/η = C/(2−N),  4σ/c = 8πk (k/(cη))³ Γ(3−N).
/// Throws InvalidN unless N < 2, DomainError unless the inputs are positive.
FittedConstants fit_exponential_law(double n, const FitInputs& inputs = {});

/// (k, η) for the Planck distribution, with X_max the root of X = 3(1 − e^{−X})
/// and ∫ X³/(e^X − 1) dX = Γ(4)ζ(4).
FittedConstants fit_planck(const FitInputs& inputs = {});

/// Root of X = 3(1 − e^{−X}) on (0, ∞).
double planck_peak_x();

struct Table1Cell {
  std::string law_name;
  std::string quantity;  ///< "k" or "eta"
  double expected = 0.0;
  double fitted = 0.0;
  double relative_error = 0.0;
  bool pass = false;
};

struct Table1Report {
  std::vector<FittedConstants> fits;  ///< wien-paschen, thiesen, rayleigh, planck
  std::vector<Table1Cell> cells;      ///< k then η for each fit
  double tolerance = 0.0;
  bool pass = false;
};

/// Relative tolerance applied to every Table 1 cell.
inline constexpr double kTable1Tolerance = 2e-3;

/// Runs the four fits and compares them with the published table values.
/// The Rayleigh–Jeans row shares Planck's constants and is not fitted.
Table1Report verify_table1(const FitInputs& inputs = {}, double tolerance = kTable1Tolerance);

}  // namespace piradiance

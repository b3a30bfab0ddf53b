#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "piradiance/special_numerics.hpp"

namespace piradiance {

/// Speed of light used by every preset law, m/s.
inline constexpr double kSpeedOfLight = 2.99792458e8;

/// The dimensionless universal function Φ_R(X) of X = ην/(kT).
///
/// The 8π factor of the spectral law is fixed in the law itself, so Φ_R is
/// the only free shape.
class UniversalFunction {
 public:
  enum class Kind { exponential, planck_distribution, power_law, constant_one };

  /// Φ(X) = e^{−X}
  static UniversalFunction exponential() { return UniversalFunction(Kind::exponential, 0.0); }
  /// Φ(X) = 1/(e^X − 1)
  static UniversalFunction planck_distribution() { return UniversalFunction(Kind::planck_distribution, 0.0); }
  /// Φ(X) = X^exponent
  static UniversalFunction power_law(double exponent) { return UniversalFunction(Kind::power_law, exponent); }
  /// Φ(X) = 1
  static UniversalFunction constant_one() { return UniversalFunction(Kind::constant_one, 0.0); }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] double exponent() const noexcept { return exponent_; }
  [[nodiscard]] std::string describe() const;

  [[nodiscard]] double value(double x) const;
  [[nodiscard]] double derivative(double x) const;
  [[nodiscard]] double second_derivative(double x) const;

  /// X^p · Φ(X) evaluated in log space where that avoids overflow, and with
  /// expm1 for the Planck distribution near X = 0.
  [[nodiscard]] double weighted(double x, double p) const;

  /// X·Φ′(X)/Φ(X), the logarithmic derivative that fixes the extreme.
  [[nodiscard]] double log_derivative(double x) const;

 private:
  UniversalFunction(Kind kind, double exponent) : kind_(kind), exponent_(exponent) {}
  Kind kind_;
  double exponent_;
};

/// U(ν,T) = (8πν²/c³) kT X^{−N} Φ(X), X = ην/(kT).
class RadiationLaw {
 public:
  /// Throws InvalidN unless N < 3 and DomainError unless k, η, c > 0.
  RadiationLaw(std::string name, double n, UniversalFunction phi, double k, double eta,
               double c = kSpeedOfLight);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] double n() const noexcept { return n_; }
  [[nodiscard]] const UniversalFunction& phi() const noexcept { return phi_; }
  [[nodiscard]] double k() const noexcept { return k_; }
  [[nodiscard]] double eta() const noexcept { return eta_; }
  [[nodiscard]] double c() const noexcept { return c_; }

  /// X = ην/(kT).
  [[nodiscard]] double reduced_frequency(double nu, double temperature) const {
    return eta_ * nu / (k_ * temperature);
  }

 private:
  std::string name_;
  double n_;
  UniversalFunction phi_;
  double k_;
  double eta_;
  double c_;
};

/// Table-of-constants reference values the presets default to.
struct LawConstants {
  double k;
  double eta;
};
inline constexpr LawConstants kPlanckConstants{1.3806e-23, 6.6262e-34};
inline constexpr LawConstants kWienPaschenConstants{1.7963e-23, 9.1670e-34};
inline constexpr LawConstants kThiesenConstants{1.8768e-23, 7.9813e-34};
inline constexpr LawConstants kRayleighConstants{1.5967e-23, 5.4323e-34};
inline constexpr LawConstants kRayleighJeansConstants{1.3806e-23, 6.6262e-34};

namespace laws {
RadiationLaw rayleigh_jeans(LawConstants constants = kRayleighJeansConstants, double c = kSpeedOfLight);
RadiationLaw rayleigh(LawConstants constants = kRayleighConstants, double c = kSpeedOfLight);
RadiationLaw wien_paschen(LawConstants constants = kWienPaschenConstants, double c = kSpeedOfLight);
RadiationLaw thiesen(LawConstants constants = kThiesenConstants, double c = kSpeedOfLight);
RadiationLaw planck(LawConstants constants = kPlanckConstants, double c = kSpeedOfLight);

/// Names accepted by by_name, in display order.
std::span<const std::string_view> names();
/// "planck", "wien-paschen", "thiesen", "rayleigh" or "rayleigh-jeans";
/// throws UnknownLaw otherwise.
RadiationLaw by_name(std::string_view name);
RadiationLaw by_name(std::string_view name, LawConstants constants, double c = kSpeedOfLight);
/// Table constants for a preset name; throws UnknownLaw.
LawConstants default_constants(std::string_view name);
}  // namespace laws

/// Spectral energy density U(ν,T), J·s·m⁻³. DomainError unless ν, T > 0.
double spectral_density(const RadiationLaw& law, double nu, double temperature);

struct SpectralDerivatives {
  double first;         ///< ∂U/∂ν
  double second;        ///< ∂²U/∂ν²
  double second_scale;  ///< sum of magnitudes of the terms making up `second`
};

/// Analytic ∂U/∂ν and ∂²U/∂ν² with α = 8πη/c³ and β = η/(kT):
///   U′  = α β^{−N−1} ν^{1−N} [(2−N)Φ + XΦ′]
///   U″ = α β^{−N−1} ν^{−N} [(1−N)(2−N)Φ + 2(2−N)XΦ′ + X²Φ″]
SpectralDerivatives spectral_density_derivatives(const RadiationLaw& law, double nu, double temperature);

/// X at which U′ = 0, so ν_max/T = X·k/η.
/// Throws NoMaximum for power-law Φ (stationary inflection), for Φ ≡ 1
/// (monotone) and whenever no maximum exists for the given N.
double find_peak(const RadiationLaw& law);

/// ν_max/T in s⁻¹K⁻¹.
double peak_nu_over_t(const RadiationLaw& law);

/// ∫_0^∞ X^{2−N} Φ(X) dX. Throws DivergentIntegral.
double energy_integral(const RadiationLaw& law, double tol = kDefaultQuadratureTol);

/// a = 8πk (k/(cη))³ ∫ X^{2−N}Φ dX, so E(T) = a T⁴. Throws DivergentIntegral.
double radiation_constant(const RadiationLaw& law, double tol = kDefaultQuadratureTol);

/// σ = c·a/4.
double stefan_constant(const RadiationLaw& law, double tol = kDefaultQuadratureTol);

/// E(T) = a T⁴, J/m³.
double energy_density(const RadiationLaw& law, double temperature, double tol = kDefaultQuadratureTol);

enum class ExtremumKind { maximum, inflection, none };

std::string_view to_string(ExtremumKind kind);

struct LimitProbe {
  double x;
  double value;
};

struct CriteriaReport {
  // Red: lim_{X→0} X^{−N}Φ(X) = 1.
  double red_limit = 0.0;
  bool red_pass = false;
  std::vector<LimitProbe> red_sequence;

  // Violet: lim_{X→∞} X^{3−N}Φ(X) = 0.
  double violet_exponent = 0.0;  ///< 3 − N
  double violet_limit = 0.0;
  bool violet_pass = false;
  std::vector<LimitProbe> violet_sequence;

  // Strengthened violet, probed at m = 4 − N > 3 − N.
  double violet_limit_exponent_m = 0.0;
  double strengthened_violet_limit = 0.0;
  bool strengthened_violet_pass = false;

  DivergenceVerdict energy_integral;
  std::optional<double> energy_integral_value;

  ExtremumKind max_kind = ExtremumKind::none;
  std::optional<double> peak_x;
};

/// Tolerance for the numerically probed limits.
inline constexpr double kLimitTolerance = 1e-6;

/// Probes the red and violet limits on X = 10⁻¹…10⁻⁸ and 10¹…10³,
/// classifies the energy integral, and inspects the extreme.
CriteriaReport evaluate_criteria(const RadiationLaw& law, double quadrature_tol = kDefaultQuadratureTol);

struct SpectrumSample {
  double nu_over_t;  ///< s⁻¹K⁻¹
  double u_over_t3;  ///< J·s·m⁻³·K⁻³
};

/// U/T³ against ν/T, evaluated at T = 1 K (the curve does not depend on T).
/// The grid must be positive and strictly increasing (DomainError).
std::vector<SpectrumSample> sample_spectrum(const RadiationLaw& law, std::span<const double> nu_over_t_grid);

/// Largest relative difference of U/T³ over the grid between two
/// temperatures; zero up to rounding for every law of this family.
double temperature_independence_error(const RadiationLaw& law, std::span<const double> nu_over_t_grid,
                                      double t_a, double t_b);

/// n points spaced evenly in log between lo and hi inclusive.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

/// CSV with header `nu_over_T,U_over_T3`, %.17g cells and LF line endings.
void write_spectrum_csv(std::ostream& os, std::span<const SpectrumSample> samples);

}  // namespace piradiance

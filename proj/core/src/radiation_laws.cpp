#include "piradiance/radiation_laws.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "piradiance/errors.hpp"

namespace piradiance {
namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

struct Extreme {
  ExtremumKind kind = ExtremumKind::none;
  std::optional<double> x;
  std::string reason;
};

// Scans for the first + to − sign change of (2−N) + XΦ′/Φ, refines it, and
// classifies the stationary point by the sign of U″.
Extreme locate_extreme(const RadiationLaw& law) {
  using Kind = UniversalFunction::Kind;
  switch (law.phi().kind()) {
    case Kind::power_law:
      return {ExtremumKind::inflection, std::nullopt,
              "power-law universal function gives a stationary point of inflection"};
    case Kind::constant_one:
      return {ExtremumKind::none, std::nullopt, "spectral density is monotone in frequency"};
    default:
      break;
  }
  const double n = law.n();
  auto condition = [&](double x) { return (2.0 - n) + law.phi().log_derivative(x); };

  constexpr double kScanStart = 1e-6;
  constexpr double kScanEnd = 1e4;
  constexpr double kScanFactor = 1.25;
  double lo = kScanStart;
  double g_lo = condition(lo);
  std::optional<double> root;
  for (double hi = lo * kScanFactor; hi <= kScanEnd; hi *= kScanFactor) {
    const double g_hi = condition(hi);
    if (g_lo > 0.0 && g_hi <= 0.0) {
      root = find_root(condition, lo, hi);
      break;
    }
    lo = hi;
    g_lo = g_hi;
  }
  if (!root) {
    return {ExtremumKind::none, std::nullopt, "U' has no zero for this N"};
  }
  // Classify at T = 1 K; the sign of U″ at the extreme does not depend on T.
  const double nu = *root * law.k() / law.eta();
  const SpectralDerivatives d = spectral_density_derivatives(law, nu, 1.0);
  if (std::abs(d.second) <= 1e-9 * d.second_scale) {
    return {ExtremumKind::inflection, root, "U'' vanishes at the stationary point"};
  }
  if (d.second > 0.0) {
    return {ExtremumKind::none, root, "stationary point is a minimum"};
  }
  return {ExtremumKind::maximum, root, {}};
}

double integrand_power(const RadiationLaw& law) { return 2.0 - law.n(); }

}  // namespace

// ---------------------------------------------------------------------------
// UniversalFunction

std::string UniversalFunction::describe() const {
  switch (kind_) {
    case Kind::exponential:
      return "exp(-X)";
    case Kind::planck_distribution:
      return "1/(exp(X)-1)";
    case Kind::power_law: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "X^%.17g", exponent_);
      return buf;
    }
    case Kind::constant_one:
      return "1";
  }
  return {};
}

double UniversalFunction::value(double x) const {
  switch (kind_) {
    case Kind::exponential:
      return std::exp(-x);
    case Kind::planck_distribution:
      return 1.0 / std::expm1(x);
    case Kind::power_law:
      return std::pow(x, exponent_);
    case Kind::constant_one:
      return 1.0;
  }
  return 0.0;
}

double UniversalFunction::derivative(double x) const {
  switch (kind_) {
    case Kind::exponential:
      return -std::exp(-x);
    case Kind::planck_distribution:
      // −e^X/(e^X−1)² = −1/((e^X−1)(1−e^{−X}))
      return -1.0 / (std::expm1(x) * -std::expm1(-x));
    case Kind::power_law:
      return exponent_ * std::pow(x, exponent_ - 1.0);
    case Kind::constant_one:
      return 0.0;
  }
  return 0.0;
}

double UniversalFunction::second_derivative(double x) const {
  switch (kind_) {
    case Kind::exponential:
      return std::exp(-x);
    case Kind::planck_distribution:
      // Φ(1+Φ)(1+2Φ) with 1+2Φ = coth(X/2)
      return 1.0 / (std::expm1(x) * -std::expm1(-x) * std::tanh(0.5 * x));
    case Kind::power_law:
      return exponent_ * (exponent_ - 1.0) * std::pow(x, exponent_ - 2.0);
    case Kind::constant_one:
      return 0.0;
  }
  return 0.0;
}

double UniversalFunction::weighted(double x, double p) const {
  switch (kind_) {
    case Kind::exponential:
      return std::exp(p * std::log(x) - x);
    case Kind::planck_distribution:
      // X^p e^{−X} / (1 − e^{−X}), stable at both ends.
      return std::exp(p * std::log(x) - x) / -std::expm1(-x);
    case Kind::power_law:
      return std::pow(x, p + exponent_);
    case Kind::constant_one:
      return std::pow(x, p);
  }
  return 0.0;
}

double UniversalFunction::log_derivative(double x) const {
  switch (kind_) {
    case Kind::exponential:
      return -x;
    case Kind::planck_distribution:
      return x / std::expm1(-x);
    case Kind::power_law:
      return exponent_;
    case Kind::constant_one:
      return 0.0;
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// RadiationLaw

RadiationLaw::RadiationLaw(std::string name, double n, UniversalFunction phi, double k, double eta, double c)
    : name_(std::move(name)), n_(n), phi_(phi), k_(k), eta_(eta), c_(c) {
  if (!(n < 3.0) || !std::isfinite(n)) {
    throw InvalidN("displacement exponent N must be a finite real below 3");
  }
  require_positive(k, "k");
  require_positive(eta, "eta");
  require_positive(c, "c");
}

namespace laws {
namespace {
constexpr std::array<std::string_view, 5> kNames = {"planck", "wien-paschen", "thiesen", "rayleigh",
                                                    "rayleigh-jeans"};
}  // namespace

RadiationLaw rayleigh_jeans(LawConstants constants, double c) {
  return {"rayleigh-jeans", 0.0, UniversalFunction::constant_one(), constants.k, constants.eta, c};
}
RadiationLaw rayleigh(LawConstants constants, double c) {
  return {"rayleigh", 0.0, UniversalFunction::exponential(), constants.k, constants.eta, c};
}
RadiationLaw wien_paschen(LawConstants constants, double c) {
  return {"wien-paschen", -1.0, UniversalFunction::exponential(), constants.k, constants.eta, c};
}
RadiationLaw thiesen(LawConstants constants, double c) {
  return {"thiesen", -0.5, UniversalFunction::exponential(), constants.k, constants.eta, c};
}
RadiationLaw planck(LawConstants constants, double c) {
  return {"planck", -1.0, UniversalFunction::planck_distribution(), constants.k, constants.eta, c};
}

std::span<const std::string_view> names() { return kNames; }

LawConstants default_constants(std::string_view name) {
  if (name == "planck") return kPlanckConstants;
  if (name == "wien-paschen") return kWienPaschenConstants;
  if (name == "thiesen") return kThiesenConstants;
  if (name == "rayleigh") return kRayleighConstants;
  if (name == "rayleigh-jeans") return kRayleighJeansConstants;
  throw UnknownLaw("unknown radiation law '" + std::string(name) + "'");
}

RadiationLaw by_name(std::string_view name) { return by_name(name, default_constants(name)); }

RadiationLaw by_name(std::string_view name, LawConstants constants, double c) {
  if (name == "planck") return planck(constants, c);
  if (name == "wien-paschen") return wien_paschen(constants, c);
  if (name == "thiesen") return thiesen(constants, c);
  if (name == "rayleigh") return rayleigh(constants, c);
  if (name == "rayleigh-jeans") return rayleigh_jeans(constants, c);
  throw UnknownLaw("unknown radiation law '" + std::string(name) + "'");
}
}  // namespace laws

// ---------------------------------------------------------------------------
// Evaluation

double spectral_density(const RadiationLaw& law, double nu, double temperature) {
  require_positive(nu, "frequency");
  require_positive(temperature, "temperature");
  const double x = law.reduced_frequency(nu, temperature);
  const double c3 = law.c() * law.c() * law.c();
  return 8.0 * kPi * nu * nu / c3 * law.k() * temperature * law.phi().weighted(x, -law.n());
}

SpectralDerivatives spectral_density_derivatives(const RadiationLaw& law, double nu, double temperature) {
  require_positive(nu, "frequency");
  require_positive(temperature, "temperature");
  const double n = law.n();
  const double c3 = law.c() * law.c() * law.c();
  const double alpha = 8.0 * kPi * law.eta() / c3;
  const double beta = law.eta() / (law.k() * temperature);
  const double x = beta * nu;
  const auto& phi = law.phi();
  const double f0 = phi.value(x);
  const double f1 = phi.derivative(x);
  const double f2 = phi.second_derivative(x);

  const double scale = alpha * std::pow(beta, -n - 1.0);
  const double first = scale * std::pow(nu, 1.0 - n) * ((2.0 - n) * f0 + x * f1);

  const double t0 = (1.0 - n) * (2.0 - n) * f0;
  const double t1 = 2.0 * (2.0 - n) * x * f1;
  const double t2 = x * x * f2;
  const double pref2 = scale * std::pow(nu, -n);
  return {first, pref2 * (t0 + t1 + t2), std::abs(pref2) * (std::abs(t0) + std::abs(t1) + std::abs(t2))};
}

double find_peak(const RadiationLaw& law) {
  const Extreme e = locate_extreme(law);
  if (e.kind != ExtremumKind::maximum) {
    throw NoMaximum(law.name() + ": " + e.reason);
  }
  return *e.x;
}

double peak_nu_over_t(const RadiationLaw& law) { return find_peak(law) * law.k() / law.eta(); }

double energy_integral(const RadiationLaw& law, double tol) {
  const double p = integrand_power(law);
  const RealFunction integrand = [&law, p](double x) { return law.phi().weighted(x, p); };
  const DivergenceVerdict verdict = detect_divergence(integrand);
  if (verdict.classification == Convergence::divergent) {
    throw DivergentIntegral(law.name() + ": energy integral diverges");
  }
  return integrate_semiinfinite(integrand, tol).value;
}

double radiation_constant(const RadiationLaw& law, double tol) {
  const double ratio = law.k() / (law.c() * law.eta());
  return 8.0 * kPi * law.k() * ratio * ratio * ratio * energy_integral(law, tol);
}

double stefan_constant(const RadiationLaw& law, double tol) { return law.c() * radiation_constant(law, tol) / 4.0; }

double energy_density(const RadiationLaw& law, double temperature, double tol) {
  require_positive(temperature, "temperature");
  const double t2 = temperature * temperature;
  return radiation_constant(law, tol) * t2 * t2;
}

std::string_view to_string(ExtremumKind kind) {
  switch (kind) {
    case ExtremumKind::maximum:
      return "maximum";
    case ExtremumKind::inflection:
      return "inflection";
    case ExtremumKind::none:
      return "none";
  }
  return "none";
}

CriteriaReport evaluate_criteria(const RadiationLaw& law, double quadrature_tol) {
  CriteriaReport report;
  const auto& phi = law.phi();
  const double n = law.n();

  for (int e = 1; e <= 8; ++e) {
    const double x = std::pow(10.0, -e);
    report.red_sequence.push_back({x, phi.weighted(x, -n)});
  }
  report.red_limit = report.red_sequence.back().value;
  report.red_pass = std::abs(report.red_limit - 1.0) <= kLimitTolerance;

  report.violet_exponent = 3.0 - n;
  for (int e = 1; e <= 3; ++e) {
    const double x = std::pow(10.0, e);
    report.violet_sequence.push_back({x, phi.weighted(x, report.violet_exponent)});
  }
  report.violet_limit = report.violet_sequence.back().value;
  report.violet_pass = std::abs(report.violet_limit) <= kLimitTolerance;

  report.violet_limit_exponent_m = report.violet_exponent + 1.0;
  report.strengthened_violet_limit = phi.weighted(report.violet_sequence.back().x, report.violet_limit_exponent_m);
  report.strengthened_violet_pass = std::abs(report.strengthened_violet_limit) <= kLimitTolerance;

  const double p = integrand_power(law);
  const RealFunction integrand = [&phi, p](double x) { return phi.weighted(x, p); };
  report.energy_integral = detect_divergence(integrand);
  if (report.energy_integral.classification == Convergence::convergent) {
    const QuadratureResult q = try_integrate_semiinfinite(integrand, quadrature_tol);
    if (q.converged) {
      report.energy_integral_value = q.value;
    }
  }

  const Extreme e = locate_extreme(law);
  report.max_kind = e.kind;
  if (e.kind == ExtremumKind::maximum) {
    report.peak_x = e.x;
  }
  return report;
}

std::vector<SpectrumSample> sample_spectrum(const RadiationLaw& law, std::span<const double> nu_over_t_grid) {
  std::vector<SpectrumSample> out;
  out.reserve(nu_over_t_grid.size());
  double prev = 0.0;
  for (double x : nu_over_t_grid) {
    if (!(x > prev) || !std::isfinite(x)) {
      throw DomainError("spectrum grid must be positive and strictly increasing");
    }
    prev = x;
    out.push_back({x, spectral_density(law, x, 1.0)});
  }
  return out;
}

double temperature_independence_error(const RadiationLaw& law, std::span<const double> nu_over_t_grid, double t_a,
                                      double t_b) {
  require_positive(t_a, "temperature");
  require_positive(t_b, "temperature");
  double worst = 0.0;
  for (double x : nu_over_t_grid) {
    const double ua = spectral_density(law, x * t_a, t_a) / (t_a * t_a * t_a);
    const double ub = spectral_density(law, x * t_b, t_b) / (t_b * t_b * t_b);
    const double denom = std::max(std::abs(ua), std::abs(ub));
    if (denom > 0.0) {
      worst = std::max(worst, std::abs(ua - ub) / denom);
    }
  }
  return worst;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  require_positive(lo, "grid lower bound");
  require_positive(hi, "grid upper bound");
  if (n == 0) {
    throw DomainError("grid needs at least one point");
  }
  if (n > 1 && !(hi > lo)) {
    throw DomainError("grid upper bound must exceed lower bound");
  }
  std::vector<double> grid(n);
  if (n == 1) {
    grid[0] = lo;
    return grid;
  }
  // Base-10 exponents keep decade points exact.
  const double log_lo = std::log10(lo);
  const double span = std::log10(hi) - log_lo;
  const double last = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = std::pow(10.0, log_lo + span * static_cast<double>(i) / last);
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

void write_spectrum_csv(std::ostream& os, std::span<const SpectrumSample> samples) {
  os << "nu_over_T,U_over_T3\n";
  char buf[80];
  for (const auto& s : samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.nu_over_t, s.u_over_t3);
    os << buf;
  }
}

}  // namespace piradiance

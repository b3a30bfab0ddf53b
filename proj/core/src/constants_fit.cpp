#include "piradiance/constants_fit.hpp"

#include <cmath>
#include <numbers>

#include "piradiance/errors.hpp"
#include "piradiance/special_numerics.hpp"

namespace piradiance {
namespace {

void check_inputs(const FitInputs& in) {
  for (double v : {in.sigma, in.C, in.c}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError("fit inputs sigma, C and c must be positive and finite");
    }
  }
}

// Solves k/η = C/x_max and 4σ/c = 8πk (k/(cη))³ I for k and η.
FittedConstants solve(const FitInputs& in, double x_max, double integral, std::string name) {
  const double ratio = in.C / x_max;  // k/η
  const double c3 = in.c * in.c * in.c;
  const double k = (4.0 * in.sigma / in.c) * c3 / (8.0 * std::numbers::pi * ratio * ratio * ratio * integral);
  return {k, k / ratio, std::move(name)};
}

std::string exponential_name(double n) {
  if (n == -1.0) return "wien-paschen";
  if (n == -0.5) return "thiesen";
  if (n == 0.0) return "rayleigh";
  return "exponential";
}

}  // namespace

FittedConstants fit_exponential_law(double n, const FitInputs& inputs) {
  if (!(n < 2.0) || !std::isfinite(n)) {
    throw InvalidN("an exponential law has a maximum only for N < 2");
  }
  check_inputs(inputs);
  return solve(inputs, 2.0 - n, gamma(3.0 - n), exponential_name(n));
}

double planck_peak_x() {
  const RealFunction g = [](double x) { return x - 3.0 * -std::expm1(-x); };
  const RealFunction dg = [](double x) { return 1.0 - 3.0 * std::exp(-x); };
  return find_root(g, dg, 1.0, 5.0, 1e-14);
}

FittedConstants fit_planck(const FitInputs& inputs) {
  check_inputs(inputs);
  return solve(inputs, planck_peak_x(), gamma(4.0) * zeta_even(2), "planck");
}

Table1Report verify_table1(const FitInputs& inputs, double tolerance) {
  Table1Report report;
  report.tolerance = tolerance;
  report.fits = {fit_exponential_law(-1.0, inputs), fit_exponential_law(-0.5, inputs),
                 fit_exponential_law(0.0, inputs), fit_planck(inputs)};
  const LawConstants published[] = {kWienPaschenConstants, kThiesenConstants, kRayleighConstants, kPlanckConstants};
  report.pass = true;
  for (std::size_t i = 0; i < report.fits.size(); ++i) {
    const FittedConstants& fit = report.fits[i];
    const std::pair<const char*, std::pair<double, double>> pairs[] = {
        {"k", {published[i].k, fit.k}}, {"eta", {published[i].eta, fit.eta}}};
    for (const auto& [quantity, values] : pairs) {
      Table1Cell cell{fit.law_name, quantity, values.first, values.second, 0.0, false};
      cell.relative_error = (cell.fitted - cell.expected) / cell.expected;
      cell.pass = std::abs(cell.relative_error) <= tolerance;
      report.pass = report.pass && cell.pass;
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace piradiance

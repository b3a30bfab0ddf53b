// Runs every acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line each. Exit status is non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "piradiance/constants_fit.hpp"
#include "piradiance/pi_solver.hpp"
#include "piradiance/presets.hpp"
#include "piradiance/radiation_laws.hpp"
#include "piradiance/special_numerics.hpp"

#ifdef PIRADIANCE_HAVE_CLI
#include "piradiance/cli_runner.hpp"
#endif

using namespace piradiance;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

std::string num(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string vec(const PowerVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

void expect_powers(Outcome& o, const PowerVector& got, const PowerVector& want, const std::string& label) {
  o.check(got == want, label + ": got " + vec(got) + ", want " + vec(want));
}

template <typename F>
double elapsed_seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1 ------------------------------------------------------------------------
Outcome golden_derivations() {
  Outcome o;
  const double secs = elapsed_seconds([&] {
    const PiSystem rj = solve_pinned(presets::rayleigh_jeans_set(), presets::rayleigh_jeans_pins());
    o.check(rj.num_invariants == 1, "rayleigh-jeans p != 1");
    expect_powers(o, rj.invariants.at(0).powers, {1, -2, -1, 3, -1}, "rayleigh-jeans π1");

    for (const Rational n : {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2)}) {
      const PiSystem g = solve_pinned(presets::generalized_set(), presets::generalized_pins(n));
      const std::string tag = "generalized N=" + n.to_string();
      o.check(g.num_invariants == 2, tag + " p != 2");
      expect_powers(o, g.invariants.at(0).powers, {1, n - 2, -1 - n, 3, -1 - n, n}, tag + " π1");
      expect_powers(o, g.invariants.at(1).powers, {0, 1, -1, 0, -1, 1}, tag + " π2");
    }

    const PiSystem j = solve_pinned(presets::jeans_set(), presets::jeans_pins());
    o.check(j.rank == 5, "jeans rank " + std::to_string(j.rank));
    o.check(j.num_invariants == 3, "jeans p " + std::to_string(j.num_invariants));
    expect_powers(o, j.invariants.at(0).powers, {1, 2, -1, 1, 0, 0, -1, 0}, "jeans π1");
    expect_powers(o, j.invariants.at(1).powers, {0, 0, 1, -2, 0, -1, 1, 0}, "jeans π2");
    expect_powers(o, j.invariants.at(2).powers, {0, -1, 1, -4, 2, -2, 1, -1}, "jeans π3");
  });
  o.check(secs < 1.0, "runtime " + num(secs, 3) + " s");
  o.notes.insert(o.notes.begin(), "runtime " + num(secs * 1e3, 3) + " ms");
  return o;
}

// 2 ------------------------------------------------------------------------
Outcome jeans_functional() {
  Outcome o;
  const QuantitySet qs = presets::jeans_set();
  const auto basis = nullspace_basis(qs);
  o.check(basis.size() == 3, "nullspace dimension " + std::to_string(basis.size()));
  const auto values = functional_on_nullspace(qs, presets::jeans_exponent_functional());
  for (std::size_t i = 0; i < values.size(); ++i) {
    o.check(values[i].is_zero(), "functional on v" + std::to_string(i + 1) + " = " + values[i].to_string());
  }
  const auto forced = forced_exponent(qs, 1, {{0, Rational(1)}, {4, Rational(0)}});
  o.check(forced && *forced == Rational(2), "x_λ not forced to 2 at x_U = 1, x_e = 0");
  o.check(forced && *forced != Rational(4), "x_λ = 4 reachable");
  return o;
}

// 3 ------------------------------------------------------------------------
Outcome special_functions() {
  Outcome o;
  o.check(rel(piradiance::gamma(3.0), 2.0) <= 1e-10, "Γ(3) = " + num(piradiance::gamma(3.0), 17));
  o.check(rel(piradiance::gamma(4.0), 6.0) <= 1e-10, "Γ(4) = " + num(piradiance::gamma(4.0), 17));
  o.check(std::abs(piradiance::gamma(3.5) - 3.3234) <= 5e-5, "Γ(3.5) = " + num(piradiance::gamma(3.5)));
  const double planck = integrate_semiinfinite([](double x) { return x * x * x / std::expm1(x); }).value;
  o.check(rel(planck, std::pow(kPi, 4) / 15.0) <= 1e-7, "∫X³/(e^X−1) = " + num(planck, 12));
  o.check(std::abs(planck - 6.4939394) <= 1e-7 * 6.4939394, "∫X³/(e^X−1) vs 6.4939394");
  o.check(rel(zeta_even(2), std::pow(kPi, 4) / 90.0) <= 1e-14, "ζ(4) = " + num(zeta_even(2), 17));
  o.check(bernoulli_number(2) == Rational(1, 30), "B_2 = " + bernoulli_number(2).to_string());
  return o;
}

// 4 ------------------------------------------------------------------------
Outcome displacement_constant() {
  Outcome o;
  const double root = find_root([](double x) { return x - 3.0 * (1.0 - std::exp(-x)); }, 1.0, 5.0);
  o.check(std::abs(root - 2.82144) <= 1e-5, "root = " + num(root));
  const double peak = find_peak(laws::planck());
  o.check(std::abs(peak - 2.82144) <= 1e-5, "Planck peak X = " + num(peak));
  const FittedConstants fit = fit_planck();
  const double c = peak_nu_over_t(laws::planck(fit.constants()));
  o.check(rel(c, 5.8787e10) <= 1e-4, "fitted peak ν/T = " + num(c));
  return o;
}

// 5 ------------------------------------------------------------------------
Outcome reference_constants() {
  Outcome o;
  Table1Report report;
  const double secs = elapsed_seconds([&] { report = verify_table1(FitInputs{5.6696e-8, 5.8787e10}); });
  o.check(report.cells.size() == 8, "expected 8 cells");
  for (const Table1Cell& cell : report.cells) {
    o.check(std::abs(cell.relative_error) <= 2e-3,
            cell.law_name + " " + cell.quantity + " off by " + num(cell.relative_error * 100.0, 3) + "%");
  }
  o.check(secs < 1.0, "runtime " + num(secs, 3) + " s");
  double worst = 0.0;
  for (const Table1Cell& cell : report.cells) worst = std::max(worst, std::abs(cell.relative_error));
  o.notes.insert(o.notes.begin(), "worst cell " + num(worst * 100.0, 3) + "%, runtime " + num(secs * 1e3, 3) + " ms");
  return o;
}

// 6 ------------------------------------------------------------------------
Outcome criteria_matrix() {
  Outcome o;
  const auto report = [](const char* name) { return evaluate_criteria(laws::by_name(name)); };
  const auto yes = [](bool b) { return b ? std::string("pass") : std::string("fail"); };

  const CriteriaReport planck = report("planck");
  o.check(planck.red_pass, "planck red " + yes(planck.red_pass));
  o.check(planck.strengthened_violet_pass, "planck strengthened violet " + yes(planck.strengthened_violet_pass));
  o.check(planck.max_kind == ExtremumKind::maximum, "planck extreme " + std::string(to_string(planck.max_kind)));

  for (const char* name : {"wien-paschen", "thiesen"}) {
    const CriteriaReport r = report(name);
    o.check(!r.red_pass, std::string(name) + " red " + yes(r.red_pass) + ", expected fail");
    o.check(r.strengthened_violet_pass, std::string(name) + " strengthened violet " + yes(r.strengthened_violet_pass));
  }

  const CriteriaReport rayleigh = report("rayleigh");
  o.check(!rayleigh.red_pass, "rayleigh red " + yes(rayleigh.red_pass) + " (X^0·e^{−X} at X = 1e-8 is " +
                                  num(rayleigh.red_limit) + "), expected fail");
  o.check(rayleigh.violet_pass, "rayleigh violet " + yes(rayleigh.violet_pass));

  const CriteriaReport rj = report("rayleigh-jeans");
  o.check(!rj.violet_pass, "rayleigh-jeans violet " + yes(rj.violet_pass) + ", expected fail");
  o.check(rj.energy_integral.classification == Convergence::divergent, "rayleigh-jeans energy integral convergent");
  return o;
}

// 7 ------------------------------------------------------------------------
Outcome maximum_condition() {
  Outcome o;
  const double t = 300.0;
  for (double n : {-1.0, -0.5, 0.0, 1.0, 1.9}) {
    const RadiationLaw law("exp", n, UniversalFunction::exponential(), kPlanckConstants.k, kPlanckConstants.eta);
    const double x_e = find_peak(law);
    o.check(rel(x_e, 2.0 - n) <= 1e-9, "N=" + num(n) + " βν_e = " + num(x_e, 15));
    const double nu_e = x_e * law.k() * t / law.eta();
    const SpectralDerivatives d = spectral_density_derivatives(law, nu_e, t);
    o.check(d.second < 0.0, "N=" + num(n) + " U″(ν_e) = " + num(d.second));
  }
  for (double n : {-1.0, -0.5, 0.0, 1.0, 1.9}) {
    const RadiationLaw law("pow", n, UniversalFunction::power_law(n - 2.0), kPlanckConstants.k,
                           kPlanckConstants.eta);
    for (double x : {0.5, 1.0, 2.0 - n}) {
      const SpectralDerivatives d = spectral_density_derivatives(law, x * law.k() * t / law.eta(), t);
      o.check(std::abs(d.second) < 1e-9 * d.second_scale,
              "power law N=" + num(n) + " X=" + num(x) + " |U″|/scale = " + num(std::abs(d.second) / d.second_scale));
    }
  }

  // U′ against the central difference of U, and U″ against the central
  // difference of U′, at 100 well-conditioned random points (h = 1e-5·ν).
  std::mt19937_64 rng(0x5eedc0ffee);
  std::uniform_real_distribution<double> un(-2.0, 1.9), lx(-2.0, 1.5), lt(0.0, 4.0);
  int accepted = 0;
  double worst1 = 0.0, worst2 = 0.0;
  for (int attempt = 0; accepted < 100 && attempt < 10000; ++attempt) {
    const double n = un(rng);
    const UniversalFunction phi =
        attempt % 2 ? UniversalFunction::exponential() : UniversalFunction::planck_distribution();
    const RadiationLaw law("probe", n, phi, kPlanckConstants.k, kPlanckConstants.eta);
    const double temp = std::pow(10.0, lt(rng));
    const double nu = std::pow(10.0, lx(rng)) * law.k() * temp / law.eta();
    const SpectralDerivatives d = spectral_density_derivatives(law, nu, temp);
    const double u = spectral_density(law, nu, temp);
    if (std::abs(d.first) < 1e-3 * u / nu || std::abs(d.second) < 1e-3 * d.second_scale) continue;
    const double h = 1e-5 * nu;
    const double fd1 = (spectral_density(law, nu + h, temp) - spectral_density(law, nu - h, temp)) / (2.0 * h);
    const double fd2 = (spectral_density_derivatives(law, nu + h, temp).first -
                        spectral_density_derivatives(law, nu - h, temp).first) /
                       (2.0 * h);
    worst1 = std::max(worst1, rel(fd1, d.first));
    worst2 = std::max(worst2, rel(fd2, d.second));
    ++accepted;
  }
  o.check(accepted == 100, "only " + std::to_string(accepted) + " well-conditioned points");
  o.check(worst1 <= 1e-6, "U′ worst relative error " + num(worst1, 3));
  o.check(worst2 <= 1e-6, "U″ worst relative error " + num(worst2, 3));
  o.notes.insert(o.notes.begin(), "finite differences: U′ " + num(worst1, 3) + ", U″ " + num(worst2, 3));
  return o;
}

// 8 ------------------------------------------------------------------------
Outcome asymptotics() {
  Outcome o;
  const RadiationLaw planck = laws::planck();
  const RadiationLaw rj = laws::rayleigh_jeans(kPlanckConstants);
  const RadiationLaw wien = laws::wien_paschen(kPlanckConstants);
  const double t = 300.0;
  const auto nu_of = [&](double x) { return x * planck.k() * t / planck.eta(); };
  for (double x = 1e-3; x >= 1e-12; x /= 3.0) {
    const double ratio = spectral_density(planck, nu_of(x), t) / spectral_density(rj, nu_of(x), t);
    o.check(ratio >= 0.999 && ratio <= 1.0, "Planck/Rayleigh–Jeans at X=" + num(x) + " is " + num(ratio, 15));
  }
  for (double x = 20.0; x <= 600.0; x *= 1.25) {
    const double ratio = spectral_density(planck, nu_of(x), t) / spectral_density(wien, nu_of(x), t);
    o.check(std::abs(ratio - 1.0) <= 1e-4, "Planck/Wien–Paschen at X=" + num(x) + " is " + num(ratio, 15));
  }
  return o;
}

// 9 ------------------------------------------------------------------------
Outcome determinism() {
  Outcome o;
#ifdef PIRADIANCE_HAVE_CLI
  std::vector<std::vector<std::string>> commands;
  for (const char* p : {"rayleigh-jeans", "generalized", "jeans"}) {
    commands.push_back({"derive", "--preset", p});
    commands.push_back({"derive", "--preset", p, "--json"});
  }
  for (const auto law : laws::names()) {
    commands.push_back({"spectrum", "--preset", std::string(law)});
    commands.push_back({"criteria", "--preset", std::string(law), "--json"});
  }
  commands.push_back({"table1", "--json"});
  commands.push_back({"jeans-check", "--json"});
  for (const auto& cmd : commands) {
    std::ostringstream a, b, err;
    const int ca = cli::run(cmd, a, err);
    const int cb = cli::run(cmd, b, err);
    std::string line;
    for (const auto& part : cmd) line += part + " ";
    o.check(ca == 0 && cb == 0, line + "exited " + std::to_string(ca) + "/" + std::to_string(cb));
    o.check(a.str() == b.str() && !a.str().empty(), line + "differs between runs");
  }
  o.notes.insert(o.notes.begin(), std::to_string(commands.size()) + " commands");
#else
  o.check(false, "command-line runner not built");
#endif
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "π-derivation golden vectors", golden_derivations},
      {2, "Jeans exponent functional vanishes on the nullspace", jeans_functional},
      {3, "Γ, Planck integral and ζ(4)", special_functions},
      {4, "displacement root and fitted Planck peak", displacement_constant},
      {5, "reference constants reproduced within 0.2%", reference_constants},
      {6, "red/violet/maximum criteria matrix", criteria_matrix},
      {7, "maximum condition and analytic derivatives", maximum_condition},
      {8, "red and violet asymptotics", asymptotics},
      {9, "byte-identical repeated runs", determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.notes.push_back(std::string("exception: ") + e.what());
    }
    std::string detail;
    for (const std::string& note : outcome.notes) detail += (detail.empty() ? "" : "; ") + note;
    std::printf("%s  %d  %s%s%s\n", outcome.pass ? "PASS" : "FAIL", c.id, c.title, detail.empty() ? "" : "  -- ",
                detail.c_str());
    failures += outcome.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}

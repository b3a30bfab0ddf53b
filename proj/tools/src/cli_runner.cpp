#include "piradiance/cli_runner.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "piradiance/constants_fit.hpp"
#include "piradiance/errors.hpp"
#include "piradiance/presets.hpp"
#include "piradiance/scenario.hpp"

namespace piradiance::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct Tolerances {
  double quadrature = kDefaultQuadratureTol;
};

std::string fmt(double v, int digits = 8) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read '" + path + "'");
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file || !(file << text)) {
    throw Error("cannot write '" + output_path + "'");
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Tolerances tolerances_from_env() {
  Tolerances tol;
  const char* raw = std::getenv("PIRADIANCE_TOL");
  if (raw == nullptr || *raw == '\0') {
    return tol;
  }
  const std::string_view text(raw);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !(value > 0.0) || !std::isfinite(value)) {
    throw ParseError("PIRADIANCE_TOL must be a positive number, got '" + std::string(text) + "'");
  }
  tol.quadrature = value;
  return tol;
}

Json rational_array(std::span<const Rational> values) {
  Json arr = Json::array();
  for (const Rational& v : values) {
    arr.push_back(v.to_string());
  }
  return arr;
}

std::string rational_tuple(std::span<const Rational> values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    s += (i ? ", " : "") + values[i].to_string();
  }
  return s + ")";
}

std::string symbols(const QuantitySet& qs) {
  std::string s;
  for (const Quantity& q : qs.quantities()) {
    s += (s.empty() ? "" : " ") + q.symbol;
  }
  return s;
}

// ---------------------------------------------------------------------------
// derive

struct DeriveOptions {
  std::string preset;
  std::string input;
  std::string n = "-1";
  bool json = false;
  std::string output;
};

struct JeansCheck {
  std::vector<PowerVector> basis;
  std::vector<Rational> functional_values;
  bool vanishes = false;
  std::optional<Rational> forced_lambda;
};

constexpr std::size_t kJeansU = 0;
constexpr std::size_t kJeansLambda = 1;
constexpr std::size_t kJeansE = 4;
// U ∝ T/λ⁴ puts λ⁴ next to U¹ in the invariant.
constexpr std::int64_t kRequiredLambdaExponent = 4;

JeansCheck jeans_check(const QuantitySet& qs) {
  const std::vector<Rational> w = presets::jeans_exponent_functional();
  JeansCheck check;
  check.basis = nullspace_basis(qs);
  check.functional_values = functional_on_nullspace(qs, w);
  check.vanishes = vanishes_on_nullspace(qs, w);
  check.forced_lambda = forced_exponent(qs, kJeansLambda, {{kJeansU, Rational(1)}, {kJeansE, Rational(0)}});
  return check;
}

std::string jeans_note(const JeansCheck& check) {
  std::ostringstream os;
  os << "x_λ − 2 x_U + x_e/2 " << (check.vanishes ? "vanishes" : "does not vanish")
     << " on every non-dimensional power vector.\n";
  if (check.forced_lambda) {
    os << "With x_U = 1 and x_e = 0 the λ exponent is forced to " << check.forced_lambda->to_string()
       << "; U ∝ T/λ⁴ needs " << kRequiredLambdaExponent << ".\n";
    if (*check.forced_lambda != Rational(kRequiredLambdaExponent)) {
      os << "No choice of invariants over these quantities yields the displacement law.\n";
    }
  }
  return os.str();
}

Json jeans_json(const JeansCheck& check) {
  Json j;
  Json basis = Json::array();
  for (const PowerVector& v : check.basis) {
    basis.push_back(rational_array(v));
  }
  j["nullspace_basis"] = std::move(basis);
  j["functional"] = rational_array(presets::jeans_exponent_functional());
  j["functional_values"] = rational_array(check.functional_values);
  j["functional_vanishes"] = check.vanishes;
  j["forced_lambda_exponent"] = check.forced_lambda ? Json(check.forced_lambda->to_string()) : Json(nullptr);
  j["required_lambda_exponent"] = std::to_string(kRequiredLambdaExponent);
  j["displacement_law_reachable"] = check.forced_lambda && *check.forced_lambda == Rational(kRequiredLambdaExponent);
  return j;
}

int run_derive(const DeriveOptions& opt, std::ostream& out) {
  std::string scenario_name;
  std::optional<QuantitySet> qs;
  std::optional<PinSpec> pins;
  if (!opt.input.empty()) {
    DeriveScenario scenario = parse_derive_scenario(read_file(opt.input));
    scenario_name = opt.input;
    qs = std::move(scenario.quantities);
    pins = std::move(scenario.pins);
  } else {
    const std::string name = opt.preset.empty() ? "rayleigh-jeans" : opt.preset;
    std::optional<presets::Preset> preset = presets::by_name(name, Rational::parse(opt.n));
    if (!preset) {
      throw ParseError("unknown preset '" + name + "'");
    }
    scenario_name = preset->name;
    qs = std::move(preset->quantities);
    pins = std::move(preset->pins);
  }
  const PiSystem system = pins ? solve_pinned(*qs, *pins) : invariants_from_nullspace(*qs);
  const bool is_jeans = opt.input.empty() && scenario_name == "jeans";

  if (opt.json) {
    Json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = "derive";
    doc["scenario"] = scenario_name;
    if (scenario_name == "generalized") {
      doc["N"] = Rational::parse(opt.n).to_string();
    }
    Json basis = Json::array();
    for (const std::string& label : qs->basis().labels()) {
      basis.push_back(label);
    }
    doc["basis"] = std::move(basis);
    Json quantities = Json::array();
    for (const Quantity& q : qs->quantities()) {
      quantities.push_back({{"name", q.name}, {"symbol", q.symbol}, {"dim", render_dimension(q.dimension, qs->basis())}});
    }
    doc["quantities"] = std::move(quantities);
    doc["rank"] = system.rank;
    doc["num_invariants"] = system.num_invariants;
    Json invariants = Json::array();
    for (std::size_t i = 0; i < system.invariants.size(); ++i) {
      invariants.push_back({{"index", i + 1},
                            {"formula", system.invariants[i].formula},
                            {"powers", rational_array(system.invariants[i].powers)}});
    }
    doc["invariants"] = std::move(invariants);
    if (is_jeans) {
      doc["jeans_check"] = jeans_json(jeans_check(*qs));
    }
    emit(dump(doc), opt.output, out);
    return kOk;
  }

  std::ostringstream os;
  os << "scenario: " << scenario_name << "\n";
  if (scenario_name == "generalized") {
    os << "N = " << Rational::parse(opt.n).to_string() << "\n";
  }
  os << "quantities: " << symbols(*qs) << "\n";
  os << "rank = " << system.rank << ", p = " << system.num_invariants << "\n";
  static const char* const kSubscripts[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  for (std::size_t i = 0; i < system.invariants.size(); ++i) {
    std::string index;
    for (char ch : std::to_string(i + 1)) {
      index += kSubscripts[ch - '0'];
    }
    os << "π" << index << " = " << system.invariants[i].formula << "    "
       << rational_tuple(system.invariants[i].powers) << "\n";
  }
  if (is_jeans) {
    os << "\n" << jeans_note(jeans_check(*qs));
  }
  emit(os.str(), opt.output, out);
  return kOk;
}

// ---------------------------------------------------------------------------
// jeans-check

struct JeansOptions {
  bool json = false;
  std::string output;
};

int run_jeans_check(const JeansOptions& opt, std::ostream& out) {
  const QuantitySet qs = presets::jeans_set();
  const JeansCheck check = jeans_check(qs);
  if (opt.json) {
    Json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = "jeans-check";
    doc["rank"] = rank(dimensional_matrix(qs));
    doc.update(jeans_json(check));
    emit(dump(doc), opt.output, out);
    return kOk;
  }
  std::ostringstream os;
  os << "quantities: " << symbols(qs) << "\n";
  os << "rank = " << rank(dimensional_matrix(qs)) << ", p = " << check.basis.size() << "\n";
  os << "nullspace basis (free columns rightmost):\n";
  for (std::size_t i = 0; i < check.basis.size(); ++i) {
    os << "  v" << i + 1 << " = " << rational_tuple(check.basis[i])
       << "    x_λ − 2 x_U + x_e/2 = " << check.functional_values[i].to_string() << "\n";
  }
  os << jeans_note(check);
  emit(os.str(), opt.output, out);
  return kOk;
}

// ---------------------------------------------------------------------------
// spectrum

struct LawOptions {
  std::string preset;
  std::string input;
  std::string grid;
  bool json = false;
  std::string output;
};

LawScenario load_law(const LawOptions& opt) {
  if (!opt.input.empty()) {
    return parse_law_scenario(read_file(opt.input));
  }
  return {laws::by_name(opt.preset.empty() ? "planck" : opt.preset), std::nullopt};
}

int run_spectrum(const LawOptions& opt, std::ostream& out) {
  const LawScenario scenario = load_law(opt);
  GridSpec grid = scenario.grid.value_or(GridSpec{});
  if (!opt.grid.empty()) {
    grid = parse_grid(opt.grid);
  }
  const std::vector<double> nu_over_t = log_grid(grid.lo, grid.hi, grid.n);
  const std::vector<SpectrumSample> samples = sample_spectrum(scenario.law, nu_over_t);
  std::ostringstream os;
  write_spectrum_csv(os, samples);
  emit(os.str(), opt.output, out);
  return kOk;
}

// ---------------------------------------------------------------------------
// criteria

Json probes_json(const std::vector<LimitProbe>& probes) {
  Json arr = Json::array();
  for (const LimitProbe& p : probes) {
    arr.push_back({{"X", p.x}, {"value", p.value}});
  }
  return arr;
}

const char* verdict(bool pass) { return pass ? "pass" : "fail"; }

int run_criteria(const LawOptions& opt, const Tolerances& tol, std::ostream& out) {
  const RadiationLaw law = load_law(opt).law;
  const CriteriaReport r = evaluate_criteria(law, tol.quadrature);
  const bool divergent = r.energy_integral.classification == Convergence::divergent;

  if (opt.json) {
    Json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = "criteria";
    doc["law"] = law.name();
    doc["N"] = law.n();
    doc["phi"] = law.phi().describe();
    doc["k"] = law.k();
    doc["eta"] = law.eta();
    doc["c"] = law.c();
    doc["limit_tolerance"] = kLimitTolerance;
    doc["red"] = {{"limit", r.red_limit}, {"pass", r.red_pass}, {"sequence", probes_json(r.red_sequence)}};
    doc["violet"] = {{"exponent", r.violet_exponent},
                     {"limit", r.violet_limit},
                     {"pass", r.violet_pass},
                     {"sequence", probes_json(r.violet_sequence)}};
    doc["strengthened_violet"] = {{"exponent", r.violet_limit_exponent_m},
                                  {"limit", r.strengthened_violet_limit},
                                  {"pass", r.strengthened_violet_pass}};
    doc["energy_integral"] = {{"classification", divergent ? "divergent" : "convergent"},
                              {"witness", r.energy_integral.witness},
                              {"value", r.energy_integral_value ? Json(*r.energy_integral_value) : Json(nullptr)}};
    Json extreme;
    extreme["kind"] = std::string(to_string(r.max_kind));
    extreme["X"] = r.peak_x ? Json(*r.peak_x) : Json(nullptr);
    extreme["nu_over_T"] = r.peak_x ? Json(*r.peak_x * law.k() / law.eta()) : Json(nullptr);
    doc["extreme"] = std::move(extreme);
    emit(dump(doc), opt.output, out);
    return kOk;
  }

  std::ostringstream os;
  os << "law: " << law.name() << "  (N = " << fmt(law.n()) << ", Φ(X) = " << law.phi().describe() << ")\n";
  os << "red requirement       X^(-N) Φ at X = " << fmt(r.red_sequence.back().x) << ": " << fmt(r.red_limit, 10)
     << "  " << verdict(r.red_pass) << "\n";
  os << "violet requirement    X^(" << fmt(r.violet_exponent) << ") Φ at X = " << fmt(r.violet_sequence.back().x)
     << ": " << fmt(r.violet_limit) << "  " << verdict(r.violet_pass) << "\n";
  os << "strengthened violet   X^(" << fmt(r.violet_limit_exponent_m) << ") Φ at X = "
     << fmt(r.violet_sequence.back().x) << ": " << fmt(r.strengthened_violet_limit) << "  "
     << verdict(r.strengthened_violet_pass) << "\n";
  os << "energy integral       ∫ X^(" << fmt(2.0 - law.n()) << ") Φ dX: ";
  if (divergent) {
    os << "divergent (panel ratio " << fmt(r.energy_integral.witness, 4) << ")\n";
  } else if (r.energy_integral_value) {
    os << fmt(*r.energy_integral_value, 10) << "\n";
  } else {
    os << "convergent, tolerance not met\n";
  }
  os << "extreme               " << to_string(r.max_kind);
  if (r.peak_x) {
    os << " at X = " << fmt(*r.peak_x, 10) << " (ν/T = " << fmt(*r.peak_x * law.k() / law.eta(), 8) << " s⁻¹K⁻¹)";
  }
  os << "\n";
  emit(os.str(), opt.output, out);
  return kOk;
}

// ---------------------------------------------------------------------------
// table1

struct TableOptions {
  std::string input;
  bool json = false;
  std::string output;
};

int run_table1(const TableOptions& opt, const Tolerances& tol, std::ostream& out) {
  const FitInputs inputs = opt.input.empty() ? FitInputs{} : parse_fit_inputs(read_file(opt.input));
  const Table1Report report = verify_table1(inputs);

  // σ recomputed from each fitted law closes the loop through the quadrature.
  std::vector<double> sigma_back;
  for (const FittedConstants& fit : report.fits) {
    sigma_back.push_back(stefan_constant(laws::by_name(fit.law_name, fit.constants(), inputs.c), tol.quadrature));
  }

  if (opt.json) {
    Json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = "table1";
    doc["inputs"] = {{"sigma", inputs.sigma}, {"C", inputs.C}, {"c", inputs.c}};
    doc["tolerance"] = report.tolerance;
    doc["pass"] = report.pass;
    Json rows = Json::array();
    for (std::size_t i = 0; i < report.fits.size(); ++i) {
      const Table1Cell& kc = report.cells[2 * i];
      const Table1Cell& ec = report.cells[2 * i + 1];
      rows.push_back({{"law", report.fits[i].law_name},
                      {"k", kc.fitted},
                      {"eta", ec.fitted},
                      {"k_table", kc.expected},
                      {"eta_table", ec.expected},
                      {"k_rel_error", kc.relative_error},
                      {"eta_rel_error", ec.relative_error},
                      {"sigma_recomputed", sigma_back[i]},
                      {"pass", kc.pass && ec.pass}});
    }
    doc["rows"] = std::move(rows);
    doc["display_only"] = {
        {{"law", "rayleigh-jeans"}, {"k", kRayleighJeansConstants.k}, {"eta", kRayleighJeansConstants.eta}}};
    emit(dump(doc), opt.output, out);
    return kOk;
  }

  std::ostringstream os;
  char line[256];
  os << "sigma = " << fmt(inputs.sigma) << " J m⁻² s⁻¹ K⁻⁴, C = " << fmt(inputs.C) << " s⁻¹ K⁻¹, c = "
     << fmt(inputs.c, 10) << " m/s\n\n";
  std::snprintf(line, sizeof line, "%-15s %-13s %-13s %-10s %-10s %-13s %s\n", "law", "k [J/K]", "eta [J s]",
                "dk", "deta", "sigma", "");
  os << line;
  for (std::size_t i = 0; i < report.fits.size(); ++i) {
    const Table1Cell& kc = report.cells[2 * i];
    const Table1Cell& ec = report.cells[2 * i + 1];
    std::snprintf(line, sizeof line, "%-15s %-13.5e %-13.5e %+-10.3e %+-10.3e %-13.6e %s\n",
                  report.fits[i].law_name.c_str(), kc.fitted, ec.fitted, kc.relative_error, ec.relative_error,
                  sigma_back[i], verdict(kc.pass && ec.pass));
    os << line;
  }
  std::snprintf(line, sizeof line, "%-15s %-13.5e %-13.5e (same as planck, not fitted)\n", "rayleigh-jeans",
                kRayleighJeansConstants.k, kRayleighJeansConstants.eta);
  os << line;
  os << "\noverall: " << verdict(report.pass) << " (tolerance " << fmt(report.tolerance * 100.0, 3) << "%)\n";
  emit(os.str(), opt.output, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimensional analysis and blackbody radiation laws", "piradiance"};
  app.require_subcommand(1);

  DeriveOptions derive;
  auto* derive_cmd = app.add_subcommand("derive", "π-invariants of a quantity table");
  auto* derive_preset =
      derive_cmd->add_option("--preset", derive.preset, "rayleigh-jeans, generalized or jeans");
  derive_cmd->add_option("--input", derive.input, "scenario JSON file")->excludes(derive_preset);
  derive_cmd->add_option("--N", derive.n, "displacement exponent for the generalized preset (p or p/q)");
  derive_cmd->add_flag("--json", derive.json, "machine-readable output");
  derive_cmd->add_option("--output", derive.output, "write to a file instead of stdout");

  LawOptions spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "U/T³ against ν/T as CSV");
  auto* spectrum_preset = spectrum_cmd->add_option("--preset", spectrum.preset, "law name");
  spectrum_cmd->add_option("--input", spectrum.input, "law scenario JSON file")->excludes(spectrum_preset);
  spectrum_cmd->add_option("--grid", spectrum.grid, "lo:hi:n, log-spaced ν/T grid");
  spectrum_cmd->add_option("--output", spectrum.output, "write to a file instead of stdout");

  LawOptions criteria;
  auto* criteria_cmd = app.add_subcommand("criteria", "red, violet, energy and maximum criteria");
  auto* criteria_preset = criteria_cmd->add_option("--preset", criteria.preset, "law name");
  criteria_cmd->add_option("--input", criteria.input, "law scenario JSON file")->excludes(criteria_preset);
  criteria_cmd->add_flag("--json", criteria.json, "machine-readable output");
  criteria_cmd->add_option("--output", criteria.output, "write to a file instead of stdout");

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table1", "fit k and η of every law from σ and C");
  table_cmd->add_option("--input", table.input, "JSON with sigma, C and c");
  table_cmd->add_flag("--json", table.json, "machine-readable output");
  table_cmd->add_option("--output", table.output, "write to a file instead of stdout");

  JeansOptions jeans;
  auto* jeans_cmd = app.add_subcommand("jeans-check", "why the Jeans quantity table cannot give the displacement law");
  jeans_cmd->add_flag("--json", jeans.json, "machine-readable output");
  jeans_cmd->add_option("--output", jeans.output, "write to a file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    const Tolerances tol = tolerances_from_env();
    if (derive_cmd->parsed()) return run_derive(derive, out);
    if (spectrum_cmd->parsed()) return run_spectrum(spectrum, out);
    if (criteria_cmd->parsed()) return run_criteria(criteria, tol, out);
    if (table_cmd->parsed()) return run_table1(table, tol, out);
    if (jeans_cmd->parsed()) return run_jeans_check(jeans, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const PinError& e) {
    err << "pin error: " << e.what() << "\n";
    return kPinError;
  } catch (const UnknownLaw& e) {
    err << "error: " << e.what() << "\n";
    return kUnknownLaw;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace piradiance::cli

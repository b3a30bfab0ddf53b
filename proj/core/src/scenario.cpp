#include "piradiance/scenario.hpp"

#include <charconv>

#include "json.hpp"
#include "piradiance/errors.hpp"

namespace piradiance {
namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

std::string require_string(const json& v, const char* what) {
  if (!v.is_string()) {
    throw ParseError(std::string(what) + " must be a string");
  }
  return v.get<std::string>();
}

double require_number(const json& v, const char* what) {
  if (!v.is_number()) {
    throw ParseError(std::string(what) + " must be a number");
  }
  return v.get<double>();
}

Rational parse_value(const json& v) {
  if (v.is_number_integer()) {
    return Rational(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    return Rational::parse(v.get<std::string>());
  }
  throw ParseError("pin value must be an integer or a \"p/q\" string");
}

double parse_double(std::string_view text, const char* what) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

DeriveScenario parse_derive_scenario(std::string_view json_text) {
  const json doc = parse_json(json_text);

  const json& basis_json = require(doc, "basis");
  if (!basis_json.is_array()) {
    throw ParseError("basis must be an array of labels");
  }
  std::vector<std::string> labels;
  for (const json& label : basis_json) {
    labels.push_back(require_string(label, "basis label"));
  }
  DimensionBasis basis = [&] {
    try {
      return DimensionBasis(std::move(labels));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }();

  const json& quantities_json = require(doc, "quantities");
  if (!quantities_json.is_array()) {
    throw ParseError("quantities must be an array");
  }
  std::vector<Quantity> quantities;
  for (const json& q : quantities_json) {
    Quantity quantity;
    quantity.name = require_string(require(q, "name"), "quantity name");
    quantity.dimension = parse_dimension(require_string(require(q, "dim"), "quantity dim"), basis);
    if (q.contains("symbol")) {
      quantity.symbol = require_string(q.at("symbol"), "quantity symbol");
    }
    quantities.push_back(std::move(quantity));
  }
  DeriveScenario scenario{[&] {
                            try {
                              return QuantitySet(basis, std::move(quantities));
                            } catch (const DomainError& e) {
                              throw ParseError(e.what());
                            }
                          }(),
                          std::nullopt};

  if (doc.contains("pins")) {
    const json& pins_json = doc.at("pins");
    if (!pins_json.is_array()) {
      throw ParseError("pins must be an array");
    }
    PinSpec pins;
    for (const json& p : pins_json) {
      const json& inv = require(p, "invariant");
      if (!inv.is_number_integer() || inv.get<std::int64_t>() < 1) {
        throw ParseError("pin invariant must be a positive integer");
      }
      const std::string name = require_string(require(p, "quantity"), "pin quantity");
      const auto j = scenario.quantities.index_of(name);
      if (!j) {
        throw ParseError("pin refers to unknown quantity '" + name + "'");
      }
      pins.pin(static_cast<std::size_t>(inv.get<std::int64_t>() - 1), *j, parse_value(require(p, "value")));
    }
    scenario.pins = std::move(pins);
  }
  return scenario;
}

GridSpec parse_grid(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw ParseError("grid must have the form lo:hi:n");
  }
  GridSpec grid;
  grid.lo = parse_double(text.substr(0, first), "grid lower bound");
  grid.hi = parse_double(text.substr(first + 1, second - first - 1), "grid upper bound");
  const std::string_view count = text.substr(second + 1);
  const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), grid.n);
  if (ec != std::errc() || ptr != count.data() + count.size() || grid.n == 0) {
    throw ParseError("grid point count must be a positive integer");
  }
  if (!(grid.lo > 0.0) || !(grid.hi > grid.lo)) {
    throw ParseError("grid bounds must satisfy 0 < lo < hi");
  }
  return grid;
}

LawScenario parse_law_scenario(std::string_view json_text) {
  const json doc = parse_json(json_text);
  const std::string name = require_string(require(doc, "law"), "law");
  LawConstants constants = laws::default_constants(name);
  double c = kSpeedOfLight;
  if (doc.contains("k")) constants.k = require_number(doc.at("k"), "k");
  if (doc.contains("eta")) constants.eta = require_number(doc.at("eta"), "eta");
  if (doc.contains("c")) c = require_number(doc.at("c"), "c");
  std::optional<GridSpec> grid;
  if (doc.contains("grid")) {
    grid = parse_grid(require_string(doc.at("grid"), "grid"));
  }
  try {
    return {laws::by_name(name, constants, c), grid};
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

FitInputs parse_fit_inputs(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) {
    throw ParseError("fit inputs must be a JSON object");
  }
  FitInputs inputs;
  if (doc.contains("sigma")) inputs.sigma = require_number(doc.at("sigma"), "sigma");
  if (doc.contains("C")) inputs.C = require_number(doc.at("C"), "C");
  if (doc.contains("c")) inputs.c = require_number(doc.at("c"), "c");
  return inputs;
}

}  // namespace piradiance

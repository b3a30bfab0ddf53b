#include "piradiance/pi_solver.hpp"

#include <array>
#include <stdexcept>
#include <string_view>

#include "piradiance/errors.hpp"

namespace piradiance {
namespace {

constexpr std::array<std::string_view, 10> kSuperscriptDigits = {"⁰", "¹", "²", "³", "⁴",
                                                                   "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string superscript(std::int64_t value) {
  std::string out;
  for (char ch : std::to_string(value)) {
    out += kSuperscriptDigits[static_cast<std::size_t>(ch - '0')];
  }
  return out;
}

// Factor text for |exponent|; exponent is nonzero.
std::string factor_text(const std::string& symbol, const Rational& exponent) {
  const Rational mag = exponent.abs();
  if (mag == Rational(1)) {
    return symbol;
  }
  if (mag.is_integer()) {
    return symbol + superscript(mag.numerator());
  }
  return symbol + "^(" + mag.to_string() + ")";
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) {
      out += ' ';
    }
    out += p;
  }
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) {
      acc += a[i] * b[i];
    }
  }
  return acc;
}

// κ × p matrix whose columns are the given vectors.
RationalMatrix columns_matrix(std::span<const PowerVector> vectors, std::size_t length) {
  RationalMatrix m(length, vectors.size());
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    if (vectors[c].size() != length) {
      throw LengthMismatch("power vector length mismatch");
    }
    for (std::size_t r = 0; r < length; ++r) {
      m(r, c) = vectors[c][r];
    }
  }
  return m;
}

}  // namespace

void PinSpec::pin(std::size_t invariant, std::size_t quantity, Rational value) {
  if (invariants.size() <= invariant) {
    invariants.resize(invariant + 1);
  }
  invariants[invariant][quantity] = value;
}

std::size_t rank(const RationalMatrix& g) { return matrix_rank(g); }

PiSystem solve_pinned(const QuantitySet& qs, const PinSpec& pins) {
  const RationalMatrix g = dimensional_matrix(qs);
  const std::size_t kappa = qs.size();
  const std::size_t r = rank(g);
  const std::size_t p = kappa - r;

  if (pins.invariants.size() != p) {
    throw PinCountMismatch("expected pins for " + std::to_string(p) + " invariant(s), got " +
                           std::to_string(pins.invariants.size()));
  }

  // Validate every invariant's pin choice before solving any of them.
  std::vector<std::vector<std::size_t>> free_columns(p);
  for (std::size_t i = 0; i < p; ++i) {
    const auto& inv_pins = pins.invariants[i];
    if (inv_pins.size() != p) {
      throw PinCountMismatch("invariant " + std::to_string(i + 1) + " needs " + std::to_string(p) +
                             " pin(s), got " + std::to_string(inv_pins.size()));
    }
    for (const auto& [j, value] : inv_pins) {
      if (j >= kappa) {
        throw PinCountMismatch("pin refers to quantity index " + std::to_string(j) + " but the set has " +
                               std::to_string(kappa) + " quantities");
      }
    }
    for (std::size_t j = 0; j < kappa; ++j) {
      if (!inv_pins.contains(j)) {
        free_columns[i].push_back(j);
      }
    }
    if (rank(g.select_columns(free_columns[i])) != r) {
      throw SingularSubsystem("pins of invariant " + std::to_string(i + 1) +
                              " leave a singular subsystem for the remaining exponents");
    }
  }

  PiSystem sys{qs, r, p, {}};
  std::vector<PowerVector> vectors;
  for (std::size_t i = 0; i < p; ++i) {
    const auto& inv_pins = pins.invariants[i];
    PowerVector x(kappa);
    std::vector<Rational> rhs(g.rows());
    for (const auto& [j, value] : inv_pins) {
      x[j] = value;
      for (std::size_t n = 0; n < g.rows(); ++n) {
        rhs[n] -= g(n, j) * value;
      }
    }
    const auto solved = solve_linear(g.select_columns(free_columns[i]), rhs);
    if (!solved) {
      // Full column rank over the column space of G makes this unreachable.
      throw std::logic_error("inconsistent pinned subsystem");
    }
    for (std::size_t k = 0; k < free_columns[i].size(); ++k) {
      x[free_columns[i][k]] = (*solved)[k];
    }
    if (!dimension_of_product(qs, x).is_dimensionless()) {
      throw std::logic_error("pinned solution is not dimensionless");
    }
    vectors.push_back(x);
    sys.invariants.push_back({std::move(x), {}});
  }
  if (p > 0 && matrix_rank(columns_matrix(vectors, kappa)) != p) {
    throw DependentInvariants("pinned invariants are linearly dependent");
  }
  for (auto& inv : sys.invariants) {
    inv.formula = render_formula(qs, inv.powers);
  }
  return sys;
}

std::vector<PowerVector> nullspace_basis(const RationalMatrix& g) {
  const RowEchelon ech = row_echelon(g);
  std::vector<bool> is_pivot(g.cols(), false);
  for (std::size_t c : ech.pivot_columns) {
    is_pivot[c] = true;
  }
  std::vector<PowerVector> basis;
  for (std::size_t f = 0; f < g.cols(); ++f) {
    if (is_pivot[f]) {
      continue;
    }
    PowerVector v(g.cols());
    v[f] = Rational(1);
    for (std::size_t k = 0; k < ech.pivot_columns.size(); ++k) {
      v[ech.pivot_columns[k]] = -ech.reduced(k, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<PowerVector> nullspace_basis(const QuantitySet& qs) { return nullspace_basis(dimensional_matrix(qs)); }

PiSystem invariants_from_nullspace(const QuantitySet& qs) {
  const RationalMatrix g = dimensional_matrix(qs);
  PiSystem sys{qs, rank(g), 0, {}};
  for (auto& v : nullspace_basis(g)) {
    std::string formula = render_formula(qs, v);
    sys.invariants.push_back({std::move(v), std::move(formula)});
  }
  sys.num_invariants = sys.invariants.size();
  return sys;
}

bool in_span(std::span<const PowerVector> basis, std::span<const Rational> v) {
  return solve_linear(columns_matrix(basis, v.size()), v).has_value();
}

std::string render_formula(const QuantitySet& qs, std::span<const Rational> powers) {
  if (powers.size() != qs.size()) {
    throw LengthMismatch("formula powers do not match quantity count");
  }
  std::vector<std::string> numerator;
  std::vector<std::string> denominator;
  for (std::size_t j = 0; j < powers.size(); ++j) {
    if (powers[j].is_zero()) {
      continue;
    }
    auto& side = powers[j] > Rational(0) ? numerator : denominator;
    side.push_back(factor_text(qs.quantity(j).symbol, powers[j]));
  }
  std::string out = numerator.empty() ? "1" : join(numerator);
  if (denominator.size() == 1) {
    out += " / " + denominator.front();
  } else if (denominator.size() > 1) {
    out += " / (" + join(denominator) + ")";
  }
  return out;
}

ScalingCheck verify_scaling_freedom(const QuantitySet& qs, const Rational& alpha, std::size_t pinned) {
  if (alpha.is_zero()) {
    throw DomainError("scaling exponent alpha must be nonzero");
  }
  const std::size_t p = qs.size() - rank(dimensional_matrix(qs));
  if (p != 1) {
    throw NotSingleInvariant("scaling freedom needs exactly one invariant, the set has " + std::to_string(p));
  }
  PinSpec unit_pins;
  unit_pins.pin(0, pinned, Rational(1));
  PinSpec alpha_pins;
  alpha_pins.pin(0, pinned, alpha);

  ScalingCheck check;
  check.alpha = alpha;
  check.unit = solve_pinned(qs, unit_pins).invariants.front().powers;
  check.scaled = solve_pinned(qs, alpha_pins).invariants.front().powers;
  check.holds = true;
  for (std::size_t j = 0; j < check.unit.size(); ++j) {
    if (check.scaled[j] != alpha * check.unit[j]) {
      check.holds = false;
    }
  }
  return check;
}

std::vector<Rational> functional_on_nullspace(const QuantitySet& qs, std::span<const Rational> functional) {
  if (functional.size() != qs.size()) {
    throw LengthMismatch("functional length does not match quantity count");
  }
  std::vector<Rational> values;
  for (const auto& v : nullspace_basis(qs)) {
    values.push_back(dot(functional, v));
  }
  return values;
}

bool vanishes_on_nullspace(const QuantitySet& qs, std::span<const Rational> functional) {
  // w annihilates ker G exactly when w is a combination of the rows of G.
  const RationalMatrix gt = dimensional_matrix(qs).transposed();
  if (functional.size() != gt.rows()) {
    throw LengthMismatch("functional length does not match quantity count");
  }
  return solve_linear(gt, functional).has_value();
}

std::optional<Rational> forced_exponent(const QuantitySet& qs, std::size_t target,
                                        const std::map<std::size_t, Rational>& fixed) {
  if (target >= qs.size()) {
    throw LengthMismatch("target quantity index out of range");
  }
  const auto basis = nullspace_basis(qs);
  const std::size_t p = basis.size();

  // Coefficients c with Σ c_k basis_k matching every fixed exponent.
  RationalMatrix constraints(fixed.size(), p);
  std::vector<Rational> values;
  std::size_t row = 0;
  for (const auto& [j, value] : fixed) {
    if (j >= qs.size()) {
      throw LengthMismatch("fixed quantity index out of range");
    }
    for (std::size_t k = 0; k < p; ++k) {
      constraints(row, k) = basis[k][j];
    }
    values.push_back(value);
    ++row;
  }
  if (!solve_linear(constraints, values)) {
    throw DomainError("no dimensionless product satisfies the fixed exponents");
  }

  // The target is determined iff its coefficient row lies in the row space
  // of the constraints; then target = y · values for F^T y = t.
  std::vector<Rational> target_row(p);
  for (std::size_t k = 0; k < p; ++k) {
    target_row[k] = basis[k][target];
  }
  const auto y = solve_linear(constraints.transposed(), target_row);
  if (!y) {
    return std::nullopt;
  }
  return dot(*y, values);
}

}  // namespace piradiance

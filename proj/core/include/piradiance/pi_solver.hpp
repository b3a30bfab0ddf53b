#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "piradiance/dimension.hpp"
#include "piradiance/matrix.hpp"
#include "piradiance/rational.hpp"

namespace piradiance {

/// Exponents x_j of ∏ Q_j^{x_j}, one per quantity of a QuantitySet.
using PowerVector = std::vector<Rational>;

/// Chosen values for free exponents, one map per invariant.
///
/// `invariants[i]` maps a quantity index j to the pinned exponent x_{j,i}.
/// A well-formed spec has exactly κ − rank invariants with κ − rank pins each.
struct PinSpec {
  std::vector<std::map<std::size_t, Rational>> invariants;

  /// Sets x_{quantity, invariant}; both indices are zero-based. Grows the
  /// invariant list as needed.
  void pin(std::size_t invariant, std::size_t quantity, Rational value);
};

struct PiInvariant {
  PowerVector powers;
  std::string formula;
};

struct PiSystem {
  QuantitySet quantity_set;
  std::size_t rank = 0;
  std::size_t num_invariants = 0;  ///< p = κ − rank
  std::vector<PiInvariant> invariants;
};

std::size_t rank(const RationalMatrix& g);

/// Solves G·x_i = 0 with the pins of each invariant fixed.
///
/// Every pin choice is validated before anything is solved: the spec must
/// have p invariants of p pins each (PinCountMismatch), the unpinned columns
/// of G must span its column space so the remaining exponents are unique
/// (SingularSubsystem), and the resulting vectors must be independent
/// (DependentInvariants).
PiSystem solve_pinned(const QuantitySet& qs, const PinSpec& pins);

/// κ − rank basis vectors of the homogeneous solutions of G·x = 0.
///
/// Pivots are chosen left to right, so the free variables are the rightmost
/// non-pivot columns; the vector for free column f has x_f = 1 and zeros in
/// the other free slots. Empty when κ = rank.
std::vector<PowerVector> nullspace_basis(const RationalMatrix& g);
std::vector<PowerVector> nullspace_basis(const QuantitySet& qs);

/// PiSystem whose invariants are the nullspace basis vectors.
PiSystem invariants_from_nullspace(const QuantitySet& qs);

/// True when `v` is an exact rational combination of `basis`.
bool in_span(std::span<const PowerVector> basis, std::span<const Rational> v);

/// Human-readable product, e.g. "U c³ / (ν² T k)".
///
/// Positive exponents form the numerator and negative ones the
/// denominator, both in quantity order. Integer exponents use superscript
/// digits; fractional ones render as "^(p/q)".
std::string render_formula(const QuantitySet& qs, std::span<const Rational> powers);

struct ScalingCheck {
  Rational alpha;
  PowerVector unit;    ///< invariant from pin x_{j,1} = 1
  PowerVector scaled;  ///< invariant from pin x_{j,1} = α
  bool holds = false;  ///< scaled == α · unit, exactly
};

/// For a single-invariant set, checks that pinning quantity `pinned` to α
/// yields the α-th power of the invariant pinned to 1.
/// Throws NotSingleInvariant when p ≠ 1 and DomainError when α = 0.
ScalingCheck verify_scaling_freedom(const QuantitySet& qs, const Rational& alpha, std::size_t pinned = 0);

/// Values of the linear functional w·x on each nullspace basis vector.
std::vector<Rational> functional_on_nullspace(const QuantitySet& qs, std::span<const Rational> functional);

/// True when w·x = 0 for every non-dimensional power vector x, i.e. w lies
/// in the row space of G.
bool vanishes_on_nullspace(const QuantitySet& qs, std::span<const Rational> functional);

/// The exponent of quantity `target` shared by every non-dimensional power
/// vector that satisfies `fixed` (quantity index → exponent), or nullopt if
/// the constraints leave it free. Throws DomainError when no power vector
/// satisfies `fixed` at all.
std::optional<Rational> forced_exponent(const QuantitySet& qs, std::size_t target,
                                        const std::map<std::size_t, Rational>& fixed);

}  // namespace piradiance

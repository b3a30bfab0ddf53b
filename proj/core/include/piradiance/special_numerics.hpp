#pragma once

#include <functional>

#include "piradiance/rational.hpp"

namespace piradiance {

using RealFunction = std::function<double(double)>;

inline constexpr double kDefaultQuadratureTol = 1e-8;
inline constexpr double kDefaultRootTol = 1e-10;

/// Euler's Γ(χ) for real χ > 0 (Lanczos, g = 7, nine terms).
/// Relative error is below 1e-13 on [0.5, 30]. Throws NonPositiveArgument.
double gamma(double chi);

/// k-th Bernoulli number in the classical indexing used by the sum
/// Σ 1/n^{2k} = 2^{2k−1} π^{2k} B_k / (2k)!, i.e. B_1 = 1/6, B_2 = 1/30,
/// B_3 = 1/42 (the modern |B_{2k}|). Exact while it fits in 64 bits;
/// throws std::overflow_error beyond that.
Rational bernoulli_number(int k);

/// ζ(2k) = Σ_{n≥1} n^{−2k} for k ≥ 1.
///
/// Uses the Bernoulli closed form whenever B_k is exactly representable;
/// for larger k (where the series converges in a handful of terms) it
/// sums the series directly.
double zeta_even(int k);

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  bool converged = false;  ///< implies abs_error_estimate <= requested tolerance
};

/// Globally adaptive 7/15-point Gauss-Kronrod on a finite [a, b].
/// Never evaluates f at the endpoints.
QuadratureResult integrate_interval(const RealFunction& f, double a, double b, double tol = kDefaultQuadratureTol);

/// ∫_0^∞ f(X) dX by panel doubling.
///
/// The half-line is cut at powers of two, [2^i, 2^{i+1}] outward from 1 in
/// both directions; each panel is integrated adaptively and the walk stops
/// once the panels shrink geometrically and the extrapolated remainder is
/// below tolerance. The remainder estimate is included in the error.
QuadratureResult try_integrate_semiinfinite(const RealFunction& f, double tol = kDefaultQuadratureTol);

/// Same as try_integrate_semiinfinite but throws ToleranceNotMet when the
/// requested accuracy is not reached.
QuadratureResult integrate_semiinfinite(const RealFunction& f, double tol = kDefaultQuadratureTol);

enum class Convergence { convergent, divergent };

struct DivergenceVerdict {
  Convergence classification = Convergence::convergent;
  /// Largest ratio I_{i+1}/I_i between successive panel integrals in the
  /// last window examined; ≥ 0.5 throughout a divergent window.
  double witness = 0.0;
};

/// Decides whether ∫_0^∞ f diverges from partial integrals over doubling
/// panels.
///
/// A tail is declared divergent when eight consecutive panels each fail to
/// shrink by the decay factor. Going out to infinity the panels are
/// [2^i, 2^{i+1}] and the factor is 1/2, so tails decaying more slowly than
/// X^{−2} are reported divergent. Going in to zero the panels are
/// [2^{−i−1}, 2^{−i}] and the factor is 2^{−1/2}: bounded integrands pass,
/// and anything at least as singular as X^{−1/2} is reported divergent.
/// f must be non-negative on the tails.
DivergenceVerdict detect_divergence(const RealFunction& f);

/// Root of g in [lo, hi] by safeguarded Newton-bisection.
///
/// Requires g(lo)·g(hi) ≤ 0 (NoSignChange otherwise). The slope is
/// estimated by central differences. The returned point is always inside
/// the initial bracket and satisfies |g(x)| ≤ tol (ToleranceNotMet if the
/// bracket collapses onto a discontinuity instead).
double find_root(const RealFunction& g, double lo, double hi, double tol = kDefaultRootTol);

/// Variant with an analytic derivative.
double find_root(const RealFunction& g, const RealFunction& dg, double lo, double hi,
                 double tol = kDefaultRootTol);

}  // namespace piradiance

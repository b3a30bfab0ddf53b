#include "piradiance/special_numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "piradiance/errors.hpp"

namespace piradiance {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// ---------------------------------------------------------------------------
// Gamma

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double x) {
  if (x < 0.5) {
    // Reflection keeps the series in its accurate range.
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_gamma(1.0 - x));
  }
  x -= 1.0;
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (x + static_cast<double>(i));
  }
  const double t = x + kLanczosG + 0.5;
  // t^(x+0.5) split in two halves to delay overflow for large x.
  const double half = std::pow(t, 0.5 * (x + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * sum;
}

// ---------------------------------------------------------------------------
// Gauss-Kronrod 7/15

constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd Kronrod nodes (1, 3, 5) and the centre.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const RealFunction& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f_centre = f(centre);
  double kronrod = f_centre * kKronrodWeights[7];
  double gauss = f_centre * kGaussWeights[3];
  double abs_sum = std::abs(kronrod);
  std::array<double, 7> f_left{};
  std::array<double, 7> f_right{};
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    f_left[i] = f(centre - dx);
    f_right[i] = f(centre + dx);
    const double pair = f_left[i] + f_right[i];
    kronrod += kKronrodWeights[i] * pair;
    abs_sum += kKronrodWeights[i] * (std::abs(f_left[i]) + std::abs(f_right[i]));
    if (i % 2 == 1) {
      gauss += kGaussWeights[i / 2] * pair;
    }
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[7] * std::abs(f_centre - mean);
  for (std::size_t i = 0; i < 7; ++i) {
    asc += kKronrodWeights[i] * (std::abs(f_left[i] - mean) + std::abs(f_right[i] - mean));
  }
  const double value = kronrod * half;
  abs_sum *= std::abs(half);
  asc *= std::abs(half);
  // QUADPACK error heuristic, including its round-off floor.
  double error = std::abs((kronrod - gauss) * half);
  if (asc != 0.0 && error != 0.0) {
    error = asc * std::min(1.0, std::pow(200.0 * error / asc, 1.5));
  }
  if (abs_sum > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    error = std::max(50.0 * kEps * abs_sum, error);
  }
  return {a, b, value, error};
}

constexpr int kMaxSubdivisions = 2000;

QuadratureResult adaptive_gk(const RealFunction& f, double a, double b, double abs_tol, double rel_tol) {
  std::priority_queue<Segment> heap;
  Segment first = gauss_kronrod(f, a, b);
  double total = first.value;
  double error = first.error;
  heap.push(first);
  int subdivisions = 0;
  auto target = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };
  while (!(error <= target()) && subdivisions < kMaxSubdivisions) {
    if (!std::isfinite(total) || !std::isfinite(error)) {
      break;
    }
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      break;  // interval exhausted at double resolution
    }
    heap.pop();
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }
  // Re-sum to shed the drift of the running updates.
  total = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  return {total, error, std::isfinite(total) && error <= target()};
}

// One side of the semi-infinite walk: panels [2^m, 2^{m+1}] (outward) or
// [2^{-m-1}, 2^{-m}] (inward).
struct TailWalk {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
};

constexpr int kMaxPanels = 1000;
constexpr double kTailRatioLimit = 0.9;

TailWalk walk_panels(const RealFunction& f, bool outward, double panel_budget, double tail_budget) {
  TailWalk walk;
  double prev = std::numeric_limits<double>::quiet_NaN();
  double prev_ratio = std::numeric_limits<double>::infinity();
  for (int m = 0; m < kMaxPanels; ++m) {
    const double lo = outward ? std::ldexp(1.0, m) : std::ldexp(1.0, -m - 1);
    const double hi = 2.0 * lo;
    if (!std::isfinite(hi)) {
      return walk;
    }
    const double panel_tol = panel_budget * std::ldexp(1.0, -(std::min(m, 40) + 1));
    const QuadratureResult panel = adaptive_gk(f, lo, hi, panel_tol, 0.0);
    if (!panel.converged) {
      walk.value += panel.value;
      walk.error += panel.abs_error_estimate;
      return walk;
    }
    walk.value += panel.value;
    walk.error += panel.abs_error_estimate;

    const double size = std::abs(panel.value);
    double ratio = std::numeric_limits<double>::infinity();
    if (!std::isnan(prev)) {
      ratio = prev > 0.0 ? size / prev : (size == 0.0 ? 0.0 : ratio);
    }
    if (ratio < kTailRatioLimit && prev_ratio < kTailRatioLimit) {
      const double tail = size * ratio / (1.0 - ratio);
      if (tail <= tail_budget) {
        walk.error += tail;
        walk.converged = true;
        return walk;
      }
    }
    prev = size;
    prev_ratio = ratio;
  }
  return walk;
}

// ---------------------------------------------------------------------------
// Divergence

constexpr int kDivergencePanels = 64;
constexpr int kDivergenceRun = 8;
constexpr double kDecayFactor = 0.5;
// Going in to zero, X^a panels shrink by 2^{−(a+1)}. Bounded integrands
// (a = 0) sit exactly at 1/2, so the inward cut is 2^{−1/2} instead.
constexpr double kInwardDecayFactor = 0.70710678118654752;

DivergenceVerdict classify_tail(const RealFunction& f, bool outward) {
  std::deque<double> window;
  int run = 0;
  double prev = std::numeric_limits<double>::quiet_NaN();
  int zero_panels = 0;
  for (int m = 0; m < kDivergencePanels; ++m) {
    const double lo = outward ? std::ldexp(1.0, m) : std::ldexp(1.0, -m - 1);
    const double hi = 2.0 * lo;
    const double panel = adaptive_gk(f, lo, hi, 0.0, 1e-9).value;
    if (!std::isfinite(panel)) {
      return {Convergence::divergent, std::numeric_limits<double>::infinity()};
    }
    if (!std::isnan(prev)) {
      double ratio = 0.0;
      if (prev > 0.0) {
        ratio = panel / prev;
      } else if (panel > 0.0) {
        ratio = std::numeric_limits<double>::infinity();
      }
      window.push_back(ratio);
      if (window.size() > kDivergenceRun) {
        window.pop_front();
      }
      run = panel > (outward ? kDecayFactor : kInwardDecayFactor) * prev ? run + 1 : 0;
      if (run >= kDivergenceRun) {
        return {Convergence::divergent, *std::max_element(window.begin(), window.end())};
      }
    }
    zero_panels = panel == 0.0 ? zero_panels + 1 : 0;
    if (zero_panels >= 2) {
      break;
    }
    prev = panel;
  }
  const double witness = window.empty() ? 0.0 : *std::max_element(window.begin(), window.end());
  return {Convergence::convergent, witness};
}

// ---------------------------------------------------------------------------
// Roots

constexpr int kMaxRootIterations = 300;

double safeguarded_newton(const RealFunction& g, const RealFunction* dg, double lo, double hi, double tol) {
  if (!(lo < hi)) {
    throw DomainError("root bracket must satisfy lo < hi");
  }
  const double f_lo = g(lo);
  const double f_hi = g(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::isnan(f_lo) || std::isnan(f_hi) || (f_lo > 0.0) == (f_hi > 0.0)) {
    throw NoSignChange("g(" + std::to_string(lo) + ") and g(" + std::to_string(hi) +
                       ") do not bracket a root");
  }
  // Orient so that g(neg) < 0 < g(pos).
  double neg = f_lo < 0.0 ? lo : hi;
  double pos = f_lo < 0.0 ? hi : lo;

  auto slope = [&](double x) {
    if (dg != nullptr) {
      return (*dg)(x);
    }
    const double h = 1e-6 * std::max(1.0, std::abs(x));
    const double a = std::max(lo, x - h);
    const double b = std::min(hi, x + h);
    return (g(b) - g(a)) / (b - a);
  };

  double x = 0.5 * (lo + hi);
  double fx = g(x);
  double step_old = hi - lo;
  double step = step_old;
  for (int it = 0; it < kMaxRootIterations; ++it) {
    if (fx == 0.0) {
      return x;
    }
    if (fx < 0.0) {
      neg = x;
    } else {
      pos = x;
    }
    const double width = std::abs(pos - neg);
    const double scale = std::max(1.0, std::abs(x));
    if (std::abs(fx) <= tol && (std::abs(step) <= 1e-13 * scale || width <= 1e-13 * scale)) {
      return x;
    }
    if (width <= 4.0 * kEps * scale) {
      break;
    }
    const double df = slope(x);
    const bool newton_leaves_bracket = ((x - pos) * df - fx) * ((x - neg) * df - fx) > 0.0;
    const bool newton_too_slow = std::abs(2.0 * fx) > std::abs(step_old * df);
    step_old = step;
    if (df == 0.0 || !std::isfinite(df) || newton_leaves_bracket || newton_too_slow) {
      step = 0.5 * (pos - neg);
      x = neg + step;
    } else {
      step = fx / df;
      x -= step;
    }
    fx = g(x);
  }
  if (std::abs(fx) <= tol) {
    return x;
  }
  throw ToleranceNotMet("root bracket collapsed at x = " + std::to_string(x) + " with |g| = " +
                        std::to_string(std::abs(fx)) + " above tolerance");
}

}  // namespace

double gamma(double chi) {
  if (!(chi > 0.0)) {
    throw NonPositiveArgument("gamma requires a positive argument, got " + std::to_string(chi));
  }
  return lanczos_gamma(chi);
}

Rational bernoulli_number(int k) {
  if (k < 1) {
    throw DomainError("Bernoulli index must be >= 1");
  }
  // Modern B_0..B_{2k} from B_m = -1/(m+1) Σ_{j<m} C(m+1, j) B_j.
  const int n = 2 * k;
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = Rational(1);
  for (int m = 1; m <= n; ++m) {
    if (m > 1 && m % 2 == 1) {
      continue;  // odd Bernoulli numbers beyond B_1 vanish
    }
    Rational acc;
    Rational binom(1);  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      if (!b[static_cast<std::size_t>(j)].is_zero()) {
        acc += binom * b[static_cast<std::size_t>(j)];
      }
      binom = binom * Rational(m + 1 - j) / Rational(j + 1);
    }
    b[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
  }
  return b[static_cast<std::size_t>(n)].abs();
}

double zeta_even(int k) {
  if (k < 1) {
    throw DomainError("zeta_even requires k >= 1");
  }
  try {
    const Rational bk = bernoulli_number(k);
    // 2^{2k-1} π^{2k} / (2k)! = (2π)^{2k} / (2 (2k)!), built up term by term.
    double factor = 0.5;
    const double two_pi = 2.0 * std::numbers::pi;
    for (int i = 1; i <= 2 * k; ++i) {
      factor *= two_pi / static_cast<double>(i);
    }
    return factor * static_cast<double>(bk.numerator()) / static_cast<double>(bk.denominator());
  } catch (const std::overflow_error&) {
    // B_k no longer fits; here 2^{-2k} is tiny and the series settles fast.
    double sum = 0.0;
    std::vector<double> terms;
    for (int n = 1;; ++n) {
      const double term = std::pow(static_cast<double>(n), -2.0 * k);
      terms.push_back(term);
      if (term < 1e-20) {
        break;
      }
    }
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      sum += *it;
    }
    return sum;
  }
}

QuadratureResult integrate_interval(const RealFunction& f, double a, double b, double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("quadrature tolerance must be positive");
  }
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_interval needs finite limits");
  }
  if (a == b) {
    return {0.0, 0.0, true};
  }
  return adaptive_gk(f, a, b, tol, 0.0);
}

QuadratureResult try_integrate_semiinfinite(const RealFunction& f, double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("quadrature tolerance must be positive");
  }
  // Budget: 3/8 of tol for each side's panels, 1/8 for each side's remainder.
  const TailWalk outward = walk_panels(f, true, 0.375 * tol, 0.125 * tol);
  const TailWalk inward = walk_panels(f, false, 0.375 * tol, 0.125 * tol);
  QuadratureResult result;
  result.value = outward.value + inward.value;
  result.abs_error_estimate = outward.error + inward.error;
  result.converged = outward.converged && inward.converged && std::isfinite(result.value) &&
                     result.abs_error_estimate <= tol;
  return result;
}

QuadratureResult integrate_semiinfinite(const RealFunction& f, double tol) {
  QuadratureResult result = try_integrate_semiinfinite(f, tol);
  if (!result.converged) {
    throw ToleranceNotMet("semi-infinite integral did not reach tolerance " + std::to_string(tol) +
                          " (estimate " + std::to_string(result.value) + " ± " +
                          std::to_string(result.abs_error_estimate) + ")");
  }
  return result;
}

DivergenceVerdict detect_divergence(const RealFunction& f) {
  const DivergenceVerdict outward = classify_tail(f, true);
  if (outward.classification == Convergence::divergent) {
    return outward;
  }
  const DivergenceVerdict inward = classify_tail(f, false);
  if (inward.classification == Convergence::divergent) {
    return inward;
  }
  return {Convergence::convergent, std::max(outward.witness, inward.witness)};
}

double find_root(const RealFunction& g, double lo, double hi, double tol) {
  return safeguarded_newton(g, nullptr, lo, hi, tol);
}

double find_root(const RealFunction& g, const RealFunction& dg, double lo, double hi, double tol) {
  return safeguarded_newton(g, &dg, lo, hi, tol);
}

}  // namespace piradiance

/**
 * @file weights.hpp
 * @brief Nonlinear weights for the two-candidate third-order WENO stencil.
 *
 * Every weight family maps the three split-flux values around node i to the
 * pair (w0, w1) that blends the upwind candidate (3 f_i - f_{i-1}) / 2 with
 * the centered candidate (f_i + f_{i+1}) / 2.
 *
 * Two kinds of family are provided:
 *  - alpha-based families (JS3, Z3, N3, P+3) built from smoothness
 *    indicators and normalized unnormalized weights alpha_k;
 *  - limiter-based families, where a weight limiter chi(r) of the
 *    consecutive-gradient ratio r sets the upwind weight directly:
 *    w0 = 1/3 + 2/3 (1 - chi(r)), w1 = 1 - w0.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace weno3 {

/// ideal (linear) weights of the upwind and centered candidates
inline constexpr double kIdealUpwind = 1.0 / 3.0;
inline constexpr double kIdealCentered = 2.0 / 3.0;

/// split-flux values f_{i-1}, f_i, f_{i+1} feeding one interface
struct StencilValues {
  double fm1 = 0.0;
  double f0 = 0.0;
  double fp1 = 0.0;

  [[nodiscard]] bool finite() const noexcept {
    return std::isfinite(fm1) && std::isfinite(f0) && std::isfinite(fp1);
  }
};

struct SmoothnessIndicators {
  double beta0 = 0.0;
  double beta1 = 0.0;
  double beta3 = 0.0;  ///< five-point global indicator (N3)
  double tau_z = 0.0;  ///< |beta0 - beta1|
  double tau_n = 0.0;  ///< |(beta0 + beta1)/2 - beta3|
  double tau_p = 0.0;  ///< |(beta0 + beta1)/2 - (fm1 - fp1)^2 / 4|
};

[[nodiscard]] inline SmoothnessIndicators smoothness_indicators(const StencilValues& s) noexcept {
  SmoothnessIndicators out;
  const double dm = s.f0 - s.fm1;
  const double dp = s.fp1 - s.f0;
  const double curv = s.fm1 - 2.0 * s.f0 + s.fp1;
  const double span = s.fm1 - s.fp1;
  out.beta0 = dm * dm;
  out.beta1 = dp * dp;
  out.beta3 = (13.0 / 12.0) * curv * curv + 0.25 * span * span;
  const double mean = 0.5 * (out.beta0 + out.beta1);
  out.tau_z = std::abs(out.beta0 - out.beta1);
  out.tau_n = std::abs(mean - out.beta3);
  out.tau_p = std::abs(mean - 0.25 * span * span);
  return out;
}

// ---------------------------------------------------------------------------
// gradient ratio
// ---------------------------------------------------------------------------

/// Regularization constants for r = (f_i - f_{i-1}) / (f_{i+1} - f_i).
struct RatioRegularization {
  static constexpr double rel_tol = 1e-12;
  static constexpr double abs_tol = 1e-300;
  static constexpr double r_max = 1e12;
};

/// Consecutive-gradient ratio with a sign-preserving guard on a vanishing
/// forward difference. Flat data (both differences below abs_tol) maps to 1.
[[nodiscard]] inline double gradient_ratio(const StencilValues& s) noexcept {
  using R = RatioRegularization;
  const double dm = s.f0 - s.fm1;
  const double dp = s.fp1 - s.f0;
  const double adm = std::abs(dm);
  const double adp = std::abs(dp);
  if (adm < R::abs_tol && adp < R::abs_tol) return 1.0;
  if (adp < R::rel_tol * std::max(adm, R::abs_tol)) {
    if (dp == 0.0) return R::r_max;
    return (std::signbit(dm) == std::signbit(dp)) ? R::r_max : -R::r_max;
  }
  return dm / dp;
}

// ---------------------------------------------------------------------------
// weight limiters
// ---------------------------------------------------------------------------

enum class LimiterTag : std::uint8_t { chi1, chi2, chi3, chi4, chi5 };

/// A weight limiter chi(r). chi5 carries its plateau parameter k.
class LimiterKind {
 public:
  constexpr LimiterKind() = default;

  /// chi1..chi4; chi5 must be built through chi5().
  static LimiterKind simple(LimiterTag tag) {
    if (tag == LimiterTag::chi5) {
      throw std::invalid_argument("chi5 requires a k parameter");
    }
    return LimiterKind(tag, 0.0);
  }

  /// chi5 with 1 <= k <= 3. k > 3 violates the non-oscillatory region and is
  /// only accepted with allow_unsafe (used to reproduce the oscillating runs).
  static LimiterKind chi5(double k, bool allow_unsafe = false) {
    if (!std::isfinite(k) || k < 1.0) {
      throw std::invalid_argument("chi5: k must be >= 1, got " + std::to_string(k));
    }
    if (k > 3.0 && !allow_unsafe) {
      throw std::invalid_argument("chi5: k = " + std::to_string(k) +
                                  " exceeds 3; pass the unsafe override to allow it");
    }
    return LimiterKind(LimiterTag::chi5, k);
  }

  [[nodiscard]] constexpr LimiterTag tag() const noexcept { return tag_; }
  [[nodiscard]] constexpr double k() const noexcept { return k_; }

  friend constexpr bool operator==(const LimiterKind&, const LimiterKind&) = default;

 private:
  constexpr LimiterKind(LimiterTag tag, double k) : tag_(tag), k_(k) {}

  LimiterTag tag_ = LimiterTag::chi1;
  double k_ = 0.0;
};

/// chi(r) in [0, 3/2] with chi(0) = 0, chi(+-1) = 1 and chi -> 3/2 as |r| -> inf.
[[nodiscard]] inline double chi_eval(const LimiterKind& kind, double r) noexcept {
  const double a = std::abs(r);
  switch (kind.tag()) {
    case LimiterTag::chi1:
      // 3 r^2 / (2 r^2 + 1), rewritten for large |r| so r^2 cannot overflow
      return a <= 1.0 ? 3.0 * a * a / (2.0 * a * a + 1.0) : 3.0 / (2.0 + 1.0 / (a * a));
    case LimiterTag::chi2:
      return a <= 1.0 ? 3.0 * a / (2.0 * a + 1.0) : 3.0 / (2.0 + 1.0 / a);
    case LimiterTag::chi3:
      return std::min(a, 1.5);
    case LimiterTag::chi4:
      return std::min(a <= 1.0 ? 2.0 * a / (1.0 + a) : 2.0 / (1.0 + 1.0 / a), 1.5);
    case LimiterTag::chi5: {
      const double k = kind.k();
      const double tail = a <= 1.0 ? 3.0 * a / (2.0 * a + k) : 3.0 / (2.0 + k / a);
      return std::min(k * a, std::max(1.0, tail));
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// weight schemes
// ---------------------------------------------------------------------------

namespace scheme {

struct Js3 {
  double epsilon = 1e-6;
  int p = 2;
  friend bool operator==(const Js3&, const Js3&) = default;
};

struct Z3 {
  double epsilon = 1e-6;
  friend bool operator==(const Z3&, const Z3&) = default;
};

struct N3 {
  double epsilon = 1e-6;
  friend bool operator==(const N3&, const N3&) = default;
};

/// P+3 uses lambda = dx^(1/6), so its weights depend on the grid spacing.
struct PPlus3 {
  double epsilon = 1e-6;
  friend bool operator==(const PPlus3&, const PPlus3&) = default;
};

/// Parameter-free limiter weights.
struct Limiter {
  LimiterKind kind;
  friend bool operator==(const Limiter&, const Limiter&) = default;
};

}  // namespace scheme

using WeightScheme =
    std::variant<scheme::Js3, scheme::Z3, scheme::N3, scheme::PPlus3, scheme::Limiter>;

template <class S>
concept AlphaScheme = std::is_same_v<S, scheme::Js3> || std::is_same_v<S, scheme::Z3> ||
                      std::is_same_v<S, scheme::N3> || std::is_same_v<S, scheme::PPlus3>;

/// Throws std::invalid_argument when a scheme's parameters are out of range.
inline void validate(const WeightScheme& ws) {
  std::visit(
      [](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (AlphaScheme<S>) {
          if (!(s.epsilon > 0.0) || !std::isfinite(s.epsilon)) {
            throw std::invalid_argument("weight scheme: epsilon must be positive and finite");
          }
        }
        if constexpr (std::is_same_v<S, scheme::Js3>) {
          if (s.p < 1) throw std::invalid_argument("js3: exponent p must be a positive integer");
        }
      },
      ws);
}

struct WeightPair {
  double w0 = kIdealUpwind;
  double w1 = kIdealCentered;
};

/// The pair limiter schemes return whenever chi(r) == 1.
[[nodiscard]] inline constexpr WeightPair ideal_limiter_weights() noexcept {
  return {kIdealUpwind, 1.0 - kIdealUpwind};
}

namespace detail {

inline double ipow(double x, int p) noexcept {
  double out = 1.0;
  for (int i = 0; i < p; ++i) out *= x;
  return out;
}

inline WeightPair normalize(double a0, double a1) noexcept {
  const double sum = a0 + a1;
  return {a0 / sum, a1 / sum};
}

}  // namespace detail

// Unchecked kernels used on the hot path; the checked entry point is
// compute_weights(const WeightScheme&, ...).

[[nodiscard]] inline WeightPair weights(const scheme::Js3& s, const StencilValues& v,
                                        double /*dx*/) noexcept {
  const double dm = v.f0 - v.fm1;
  const double dp = v.fp1 - v.f0;
  const double a0 = kIdealUpwind / detail::ipow(s.epsilon + dm * dm, s.p);
  const double a1 = kIdealCentered / detail::ipow(s.epsilon + dp * dp, s.p);
  return detail::normalize(a0, a1);
}

[[nodiscard]] inline WeightPair weights(const scheme::Z3& s, const StencilValues& v,
                                        double /*dx*/) noexcept {
  const auto b = smoothness_indicators(v);
  const double a0 = kIdealUpwind * (1.0 + b.tau_z / (s.epsilon + b.beta0));
  const double a1 = kIdealCentered * (1.0 + b.tau_z / (s.epsilon + b.beta1));
  return detail::normalize(a0, a1);
}

[[nodiscard]] inline WeightPair weights(const scheme::N3& s, const StencilValues& v,
                                        double /*dx*/) noexcept {
  const auto b = smoothness_indicators(v);
  const double a0 = kIdealUpwind * (1.0 + b.tau_n / (s.epsilon + b.beta0));
  const double a1 = kIdealCentered * (1.0 + b.tau_n / (s.epsilon + b.beta1));
  return detail::normalize(a0, a1);
}

[[nodiscard]] inline double pplus3_lambda(double dx) noexcept { return std::pow(dx, 1.0 / 6.0); }

[[nodiscard]] inline WeightPair weights(const scheme::PPlus3& s, const StencilValues& v,
                                        double dx) noexcept {
  const auto b = smoothness_indicators(v);
  const double lam = pplus3_lambda(dx);
  const double eps = s.epsilon;
  const double a0 =
      kIdealUpwind * (1.0 + b.tau_p / (eps + b.beta0) + lam * (b.beta0 + eps) / (b.tau_p + eps));
  const double a1 =
      kIdealCentered * (1.0 + b.tau_p / (eps + b.beta1) + lam * (b.beta1 + eps) / (b.tau_p + eps));
  return detail::normalize(a0, a1);
}

[[nodiscard]] inline WeightPair weights(const scheme::Limiter& s, const StencilValues& v,
                                        double /*dx*/) noexcept {
  const double chi = chi_eval(s.kind, gradient_ratio(v));
  const double w0 = kIdealUpwind + kIdealCentered * (1.0 - chi);
  return {w0, 1.0 - w0};
}

/// Checked weight evaluation: rejects non-finite stencils and bad dx.
[[nodiscard]] inline WeightPair compute_weights(const WeightScheme& ws, const StencilValues& s,
                                                double dx) {
  if (!s.finite()) throw std::domain_error("compute_weights: non-finite stencil value");
  if (!(dx > 0.0)) throw std::invalid_argument("compute_weights: dx must be positive");
  return std::visit([&](const auto& sch) { return weights(sch, s, dx); }, ws);
}

// ---------------------------------------------------------------------------
// data-dependent stability regions of the forward-in-time candidate schemes
// ---------------------------------------------------------------------------

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_closed = false;
  bool hi_closed = false;

  [[nodiscard]] bool contains(double r) const noexcept {
    const bool above = lo_closed ? r >= lo : r > lo;
    const bool below = hi_closed ? r <= hi : r < hi;
    return above && below;
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Region {
  std::vector<Interval> parts;

  [[nodiscard]] bool contains(double r) const noexcept {
    return std::any_of(parts.begin(), parts.end(),
                       [r](const Interval& iv) { return iv.contains(r); });
  }
};

struct StabilityRegions {
  double a_lambda = 0.0;
  Region centered;  ///< (-inf, -1) U [a lambda / (2 - a lambda), inf)
  Region upwind;    ///< [-(2 - 3 a lambda) / a lambda, 3)
};

/// Regions of r in which the forward-Euler centered and second-order upwind
/// schemes are non-oscillatory, for CFL product a_lambda in (0, 1/2].
[[nodiscard]] inline StabilityRegions stability_regions(double a_lambda) {
  if (!(a_lambda > 0.0) || a_lambda > 0.5) {
    throw std::invalid_argument("stability_regions: a_lambda must lie in (0, 1/2]");
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  StabilityRegions out;
  out.a_lambda = a_lambda;
  out.centered.parts = {
      Interval{-inf, -1.0, false, false},
      Interval{a_lambda / (2.0 - a_lambda), inf, true, false},
  };
  out.upwind.parts = {Interval{-(2.0 - 3.0 * a_lambda) / a_lambda, 3.0, true, false}};
  return out;
}

}  // namespace weno3

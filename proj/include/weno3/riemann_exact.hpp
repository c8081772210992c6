/**
 * @file riemann_exact.hpp
 * @brief Exact solution of the 1D Euler Riemann problem (ideal gas, no vacuum).
 *
 * Star pressure from Newton iteration on the pressure function
 *   f(p) = f_L(p) + f_R(p) + (u_R - u_L),
 * shock branches from the Rankine-Hugoniot relations, rarefaction branches from
 * the isentropic Riemann invariants. See Toro, "Riemann Solvers and Numerical
 * Methods for Fluid Dynamics", ch. 4.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "weno3/euler.hpp"

namespace weno3 {

struct StarState {
  double p = 0.0;
  double u = 0.0;
  int iterations = 0;
};

class ExactRiemannSolver {
 public:
  static constexpr int kMaxIterations = 100;
  static constexpr double kTolerance = 1e-12;

  ExactRiemannSolver(Primitive1D left, Primitive1D right, double gamma)
      : L_(left), R_(right), g_(gamma) {
    if (!(gamma > 1.0)) throw std::invalid_argument("exact Riemann: gamma must exceed 1");
    if (!(left.rho > 0.0 && right.rho > 0.0 && left.p > 0.0 && right.p > 0.0)) {
      throw std::invalid_argument("exact Riemann: densities and pressures must be positive");
    }
    cL_ = sound_speed(L_.rho, L_.p, g_);
    cR_ = sound_speed(R_.rho, R_.p, g_);
    if (2.0 / (g_ - 1.0) * (cL_ + cR_) <= R_.u - L_.u) {
      throw std::invalid_argument("exact Riemann: data generates vacuum");
    }
    star_ = solve_star();
  }

  [[nodiscard]] const StarState& star() const noexcept { return star_; }

  /// Self-similar solution at xi = x / t.
  [[nodiscard]] Primitive1D sample(double xi) const noexcept {
    const double g = g_;
    const double ps = star_.p;
    const double us = star_.u;
    if (xi <= us) {
      if (ps > L_.p) {  // left shock
        const double q = ps / L_.p;
        const double sl = L_.u - cL_ * std::sqrt((g + 1.0) / (2.0 * g) * q + (g - 1.0) / (2.0 * g));
        if (xi <= sl) return L_;
        const double r = (g - 1.0) / (g + 1.0);
        return {L_.rho * (q + r) / (r * q + 1.0), us, ps};
      }
      const double shl = L_.u - cL_;  // left rarefaction
      if (xi <= shl) return L_;
      const double cml = cL_ * std::pow(ps / L_.p, (g - 1.0) / (2.0 * g));
      const double stl = us - cml;
      if (xi > stl) return {L_.rho * std::pow(ps / L_.p, 1.0 / g), us, ps};
      const double c = 2.0 / (g + 1.0) * (cL_ + (g - 1.0) / 2.0 * (L_.u - xi));
      const double u = 2.0 / (g + 1.0) * (cL_ + (g - 1.0) / 2.0 * L_.u + xi);
      const double rho = L_.rho * std::pow(c / cL_, 2.0 / (g - 1.0));
      return {rho, u, L_.p * std::pow(c / cL_, 2.0 * g / (g - 1.0))};
    }
    if (ps > R_.p) {  // right shock
      const double q = ps / R_.p;
      const double sr = R_.u + cR_ * std::sqrt((g + 1.0) / (2.0 * g) * q + (g - 1.0) / (2.0 * g));
      if (xi >= sr) return R_;
      const double r = (g - 1.0) / (g + 1.0);
      return {R_.rho * (q + r) / (r * q + 1.0), us, ps};
    }
    const double shr = R_.u + cR_;  // right rarefaction
    if (xi >= shr) return R_;
    const double cmr = cR_ * std::pow(ps / R_.p, (g - 1.0) / (2.0 * g));
    const double str = us + cmr;
    if (xi < str) return {R_.rho * std::pow(ps / R_.p, 1.0 / g), us, ps};
    const double c = 2.0 / (g + 1.0) * (cR_ - (g - 1.0) / 2.0 * (R_.u - xi));
    const double u = 2.0 / (g + 1.0) * (-cR_ + (g - 1.0) / 2.0 * R_.u + xi);
    const double rho = R_.rho * std::pow(c / cR_, 2.0 / (g - 1.0));
    return {rho, u, R_.p * std::pow(c / cR_, 2.0 * g / (g - 1.0))};
  }

 private:
  // f_K(p) and its derivative for one side
  void side(double p, const Primitive1D& s, double c, double& f, double& df) const noexcept {
    const double g = g_;
    if (p > s.p) {
      const double A = 2.0 / ((g + 1.0) * s.rho);
      const double B = (g - 1.0) / (g + 1.0) * s.p;
      const double q = std::sqrt(A / (p + B));
      f = (p - s.p) * q;
      df = q * (1.0 - 0.5 * (p - s.p) / (B + p));
    } else {
      const double e = (g - 1.0) / (2.0 * g);
      f = 2.0 * c / (g - 1.0) * (std::pow(p / s.p, e) - 1.0);
      df = 1.0 / (s.rho * c) * std::pow(p / s.p, -(g + 1.0) / (2.0 * g));
    }
  }

  StarState solve_star() const {
    const double g = g_;
    const double du = R_.u - L_.u;
    // two-rarefaction guess: exact when both waves are rarefactions
    const double e = (g - 1.0) / (2.0 * g);
    const double p_tr = std::pow((cL_ + cR_ - 0.5 * (g - 1.0) * du) /
                                     (cL_ / std::pow(L_.p, e) + cR_ / std::pow(R_.p, e)),
                                 1.0 / e);
    double p = std::max(p_tr, 1e-10 * std::min(L_.p, R_.p));
    for (int it = 1; it <= kMaxIterations; ++it) {
      double fl, dfl, fr, dfr;
      side(p, L_, cL_, fl, dfl);
      side(p, R_, cR_, fr, dfr);
      const double f = fl + fr + du;
      double pn = p - f / (dfl + dfr);
      if (pn <= 0.0) pn = 0.5 * p;
      const double change = 2.0 * std::abs(pn - p) / (pn + p);
      p = pn;
      if (change < kTolerance) {
        side(p, L_, cL_, fl, dfl);
        side(p, R_, cR_, fr, dfr);
        return {p, 0.5 * (L_.u + R_.u) + 0.5 * (fr - fl), it};
      }
    }
    throw std::runtime_error("exact Riemann: Newton iteration did not converge in " +
                             std::to_string(kMaxIterations) + " iterations");
  }

  Primitive1D L_, R_;
  double g_;
  double cL_ = 0.0, cR_ = 0.0;
  StarState star_;
};

/// Exact solution of the Riemann problem (left, right) sampled at xi = x / t.
[[nodiscard]] inline Primitive1D exact_riemann_euler(const Primitive1D& left,
                                                     const Primitive1D& right, double gamma,
                                                     double x_over_t) {
  return ExactRiemannSolver(left, right, gamma).sample(x_over_t);
}

}  // namespace weno3

/**
 * @file time_integration.hpp
 * @brief Three-stage SSP Runge-Kutta and the generic time-marching loop.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "weno3/errors.hpp"

namespace weno3 {

/// Smallest wave speed used for time-step selection and flux splitting.
inline constexpr double kMinWaveSpeed = 1e-12;

struct TimeControls {
  double cfl = 0.5;
  double t_final = 0.0;
  /// when set, dt = dt_over_dx * dx instead of the CFL rule
  std::optional<double> dt_over_dx;
  std::size_t max_steps = 100'000'000;

  void validate() const {
    if (dt_over_dx) {
      if (!(*dt_over_dx > 0.0)) throw ConfigError("dt_over_dx must be positive");
    } else if (!(cfl > 0.0) || cfl > 1.0) {
      throw ConfigError("cfl must lie in (0, 1]");
    }
    if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
      throw ConfigError("t_final must be finite and non-negative");
    }
  }
};

/// Stage weights b_s of the SSP-RK3 update u^{n+1} = u^n + dt sum_s b_s L(u^(s)).
inline constexpr std::array<double, 3> kSspRk3Weights = {1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0};

/// Shu-Osher SSP-RK3 in increment form:
///   u1 = u + dt k0,  u2 = u + dt (k0 + k1) / 4,  u' = u + dt (k0/6 + k1/6 + 2 k2/3),
/// algebraically identical to the convex-combination form. The right-hand side
/// is called as rhs(u, dudt) or rhs(u, dudt, stage).
class SspRk3 {
 public:
  template <class Rhs>
  void step(std::vector<double>& u, Rhs&& rhs, double dt) {
    const std::size_t n = u.size();
    stage_.resize(n);
    k0_.resize(n);
    k1_.resize(n);
    k2_.resize(n);

    call(rhs, u, k0_, 0);
    for (std::size_t i = 0; i < n; ++i) stage_[i] = u[i] + dt * k0_[i];
    call(rhs, stage_, k1_, 1);
    const double q = 0.25 * dt;
    for (std::size_t i = 0; i < n; ++i) stage_[i] = u[i] + q * (k0_[i] + k1_[i]);
    call(rhs, stage_, k2_, 2);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] += dt * (kSspRk3Weights[0] * k0_[i] + kSspRk3Weights[1] * k1_[i] +
                    kSspRk3Weights[2] * k2_[i]);
    }
  }

 private:
  template <class Rhs>
  static void call(Rhs& rhs, const std::vector<double>& u, std::vector<double>& out, int stage) {
    if constexpr (std::is_invocable_v<Rhs&, std::span<const double>, std::span<double>, int>) {
      rhs(std::span<const double>(u), std::span<double>(out), stage);
    } else {
      rhs(std::span<const double>(u), std::span<double>(out));
    }
  }

  std::vector<double> stage_, k0_, k1_, k2_;
};

template <class Rhs>
[[nodiscard]] std::vector<double> ssp_rk3_step(std::vector<double> u, Rhs&& rhs, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("ssp_rk3_step: dt must be positive");
  SspRk3 rk;
  rk.step(u, rhs, dt);
  return u;
}

/// A method-of-lines system with component-major flat state.
template <class S>
concept SemiDiscreteSystem =
    requires(S& s, const S& cs, std::span<const double> u, std::span<double> out, int stage) {
      { cs.components() } -> std::convertible_to<std::size_t>;
      { cs.cells() } -> std::convertible_to<std::size_t>;
      { cs.cell_measure() } -> std::convertible_to<double>;
      { cs.reference_dx() } -> std::convertible_to<double>;
      { s.stable_dt(u, 1.0) } -> std::convertible_to<double>;
      s.rhs(u, out, stage);
      /// net flux into the domain through its boundary during the last rhs
      /// call at `stage`, per component, integrated over the boundary
      { cs.boundary_inflow(stage) } -> std::convertible_to<std::span<const double>>;
    };

struct RunDiagnostics {
  std::size_t steps = 0;
  double t = 0.0;
  std::vector<double> min;            ///< per component
  std::vector<double> max;            ///< per component
  std::vector<double> total_initial;  ///< sum u dx (dy) per component
  std::vector<double> total_final;
  std::vector<double> boundary_inflow;  ///< time-integrated boundary flux
  /// (total_final - total_initial - boundary_inflow) / sum |u| dx at t = 0
  std::vector<double> conservation_drift;
};

namespace detail {

inline std::vector<double> component_totals(std::span<const double> u, std::size_t ncomp,
                                            std::size_t cells, double measure, bool absolute) {
  std::vector<double> out(ncomp, 0.0);
  for (std::size_t c = 0; c < ncomp; ++c) {
    double s = 0.0;
    for (std::size_t i = 0; i < cells; ++i) {
      const double v = u[c * cells + i];
      s += absolute ? std::abs(v) : v;
    }
    out[c] = s * measure;
  }
  return out;
}

inline void check_finite(std::span<const double> u, std::size_t cells, std::size_t step) {
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (!std::isfinite(u[k])) throw SolverError("non-finite value", step, k % cells);
  }
}

}  // namespace detail

/// March `u` from t = 0 to controls.t_final, landing exactly on t_final.
/// Throws SolverError carrying the index of the failing step.
template <SemiDiscreteSystem System>
RunDiagnostics advance(System& sys, std::vector<double>& u, const TimeControls& controls) {
  controls.validate();
  const std::size_t nc = sys.components();
  const std::size_t cells = sys.cells();
  if (u.size() != nc * cells) throw std::invalid_argument("advance: state size mismatch");

  RunDiagnostics d;
  d.total_initial = detail::component_totals(u, nc, cells, sys.cell_measure(), false);
  const auto scale = detail::component_totals(u, nc, cells, sys.cell_measure(), true);
  d.boundary_inflow.assign(nc, 0.0);

  SspRk3 rk;
  double t = 0.0;
  std::size_t step = 0;
  detail::check_finite(u, cells, step);
  auto rhs = [&](std::span<const double> s, std::span<double> out, int stage) {
    sys.rhs(s, out, stage);
  };
  while (t < controls.t_final) {
    if (step >= controls.max_steps) throw SolverError("step limit reached", step);
    ++step;
    double dt = 0.0;
    bool last = false;
    try {
      dt = controls.dt_over_dx ? *controls.dt_over_dx * sys.reference_dx()
                               : sys.stable_dt(u, controls.cfl);
      if (t + dt >= controls.t_final) {
        dt = controls.t_final - t;
        last = true;
      }
      rk.step(u, rhs, dt);
    } catch (const SolverError& e) {
      throw SolverError(e.reason(), step, e.cell());
    }
    detail::check_finite(u, cells, step);
    for (std::size_t c = 0; c < nc; ++c) {
      double in = 0.0;
      for (int s = 0; s < 3; ++s) in += kSspRk3Weights[s] * sys.boundary_inflow(s)[c];
      d.boundary_inflow[c] += dt * in;
    }
    t = last ? controls.t_final : t + dt;
  }

  d.steps = step;
  d.t = t;
  d.total_final = detail::component_totals(u, nc, cells, sys.cell_measure(), false);
  d.min.assign(nc, std::numeric_limits<double>::infinity());
  d.max.assign(nc, -std::numeric_limits<double>::infinity());
  d.conservation_drift.assign(nc, 0.0);
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t i = 0; i < cells; ++i) {
      d.min[c] = std::min(d.min[c], u[c * cells + i]);
      d.max[c] = std::max(d.max[c], u[c * cells + i]);
    }
    const double denom = scale[c] > 0.0 ? scale[c] : 1.0;
    d.conservation_drift[c] =
        (d.total_final[c] - d.total_initial[c] - d.boundary_inflow[c]) / denom;
  }
  return d;
}

}  // namespace weno3

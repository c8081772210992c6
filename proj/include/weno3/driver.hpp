/**
 * @file driver.hpp
 * @brief Runs a ProblemSpec with a given weight scheme and grid.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "weno3/errors.hpp"
#include "weno3/euler.hpp"
#include "weno3/problems.hpp"
#include "weno3/solver1d.hpp"
#include "weno3/solver2d.hpp"
#include "weno3/time_integration.hpp"
#include "weno3/weights.hpp"

namespace weno3 {

struct RunResult {
  Equation equation = Equation::advection;
  Grid1D grid_x;
  Grid1D grid_y;  ///< euler2d only
  double gamma = 1.4;
  /// component-major conservative state (a single component for scalar laws)
  std::vector<double> state;
  RunDiagnostics diagnostics;

  [[nodiscard]] std::size_t cells() const noexcept {
    return equation == Equation::euler2d ? grid_x.n * grid_y.n : grid_x.n;
  }
  [[nodiscard]] std::span<const double> component(std::size_t c) const noexcept {
    return {state.data() + c * cells(), cells()};
  }
  /// u for scalar laws, density otherwise
  [[nodiscard]] std::span<const double> primary() const noexcept { return component(0); }
};

/// Runs `problem` on an nx (by ny) grid to controls.t_final.
/// ny is ignored for 1D problems; zero picks the problem default.
[[nodiscard]] inline RunResult advance(const ProblemSpec& problem, const WeightScheme& scheme,
                                       std::size_t nx, std::size_t ny,
                                       const TimeControls& controls) {
  validate(scheme);
  controls.validate();
  if (nx == 0) nx = problem.nx;
  if (ny == 0) ny = problem.ny;

  RunResult r;
  r.equation = problem.equation;
  r.gamma = problem.gamma;
  r.grid_x = problem.grid_x(nx);
  switch (problem.equation) {
    case Equation::advection:
    case Equation::burgers: {
      r.state = initial_scalar(problem, r.grid_x);
      ScalarSystem1D sys(problem.scalar_law(), r.grid_x, problem.bc_x, scheme, r.state);
      r.diagnostics = advance(sys, r.state, controls);
      break;
    }
    case Equation::euler1d: {
      auto s0 = initial_euler1d(problem, r.grid_x);
      EulerSystem1D sys(r.grid_x, problem.gamma, problem.bc_x, scheme, &s0);
      r.state = s0.data();
      r.diagnostics = advance(sys, r.state, controls);
      break;
    }
    case Equation::euler2d: {
      const auto g = problem.grid_2d(nx, ny);
      r.grid_y = g.y;
      auto s0 = initial_euler2d(problem, g);
      EulerSystem2D sys(g, problem.gamma, problem.bc_x, problem.bc_y, scheme, &s0);
      r.state = s0.data();
      r.diagnostics = advance(sys, r.state, controls);
      break;
    }
  }
  return r;
}

/// Default grid and controls. Not an `advance` overload: with a std::variant
/// argument an unqualified two-argument call would find std::advance by ADL.
[[nodiscard]] inline RunResult run_default(const ProblemSpec& problem, const WeightScheme& scheme) {
  return advance(problem, scheme, problem.nx, problem.ny, problem.controls);
}

}  // namespace weno3

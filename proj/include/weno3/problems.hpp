/**
 * @file problems.hpp
 * @brief Registry of the built-in test problems and their exact solutions.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weno3/boundary.hpp"
#include "weno3/errors.hpp"
#include "weno3/euler.hpp"
#include "weno3/riemann_exact.hpp"
#include "weno3/solver1d.hpp"
#include "weno3/solver2d.hpp"
#include "weno3/time_integration.hpp"

namespace weno3 {

enum class Equation { advection, burgers, euler1d, euler2d };

[[nodiscard]] inline std::string_view to_string(Equation e) noexcept {
  switch (e) {
    case Equation::advection: return "advection";
    case Equation::burgers: return "burgers";
    case Equation::euler1d: return "euler1d";
    case Equation::euler2d: return "euler2d";
  }
  return "unknown";
}

/// Two constant states separated at x = interface (1D Riemann data).
struct RiemannData {
  Primitive1D left;
  Primitive1D right;
  double interface = 0.0;
};

struct ProblemSpec {
  std::string id;
  std::string description;
  Equation equation = Equation::advection;
  double advection_speed = 1.0;

  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 1.0;  ///< euler2d only
  std::size_t nx = 100;
  std::size_t ny = 0;  ///< euler2d only

  BoundaryPair bc_x;
  BoundaryPair bc_y;  ///< euler2d only
  TimeControls controls;
  double gamma = 1.4;

  std::function<double(double)> scalar_ic;
  std::function<Primitive1D(double)> euler1d_ic;
  std::function<Primitive2D(double, double)> euler2d_ic;
  /// >1: each 2D cell takes the average of n x n subcell samples of (rho, u, v, p)
  int subcell_samples = 1;

  std::optional<RiemannData> riemann;  ///< set for 1D Riemann problems

  [[nodiscard]] bool is_scalar() const noexcept {
    return equation == Equation::advection || equation == Equation::burgers;
  }
  [[nodiscard]] ScalarLaw scalar_law() const noexcept {
    return {equation == Equation::advection ? ScalarLaw::Kind::advection : ScalarLaw::Kind::burgers,
            advection_speed};
  }
  [[nodiscard]] Grid1D grid_x(std::size_t n) const noexcept { return {x0, x1, n}; }
  [[nodiscard]] Grid2D grid_2d(std::size_t n_x, std::size_t n_y) const noexcept {
    return {{x0, x1, n_x}, {y0, y1, n_y}};
  }
  /// exact reference available for error measurement
  [[nodiscard]] bool has_exact() const noexcept {
    return equation == Equation::advection || id == "burgers_riemann" || riemann.has_value();
  }
};

// ---------------------------------------------------------------------------
// initial conditions
// ---------------------------------------------------------------------------

namespace ic {

inline double square_wave(double x) { return std::abs(x) <= 0.3 ? 1.0 : 0.0; }

/// [0.5 + 0.5 cos(omega (x - xc))]^4 on |x - xc| < sigma
inline double smooth_bump(double x) {
  constexpr double xc = 0.5;
  constexpr double sigma = 0.2;
  constexpr double omega = 5.0 * std::numbers::pi;
  if (std::abs(x - xc) >= sigma) return 0.0;
  const double b = 0.5 + 0.5 * std::cos(omega * (x - xc));
  return b * b * b * b;
}

inline double sine(double x) { return std::sin(std::numbers::pi * x); }

inline double sine4(double x) {
  const double s = std::sin(std::numbers::pi * x);
  return s * s * s * s;
}

inline double burgers_step(double x) { return std::abs(x) < 1.0 / 3.0 ? 1.0 : -1.0; }

}  // namespace ic

namespace detail {

inline std::function<Primitive1D(double)> riemann_ic(const RiemannData& rd) {
  return [rd](double x) { return x < rd.interface ? rd.left : rd.right; };
}

inline ProblemSpec advection(std::string id, std::string desc, double x0, double x1,
                             std::function<double(double)> u0, double t_final, std::size_t n) {
  ProblemSpec p;
  p.id = std::move(id);
  p.description = std::move(desc);
  p.equation = Equation::advection;
  p.advection_speed = 1.0;
  p.x0 = x0;
  p.x1 = x1;
  p.nx = n;
  p.bc_x = {Boundary::periodic, Boundary::periodic};
  p.controls.t_final = t_final;
  p.scalar_ic = std::move(u0);
  return p;
}

inline ProblemSpec shock_tube(std::string id, std::string desc, RiemannData rd, double t_final,
                              double cfl, std::size_t n) {
  ProblemSpec p;
  p.id = std::move(id);
  p.description = std::move(desc);
  p.equation = Equation::euler1d;
  p.x0 = -5.0;
  p.x1 = 5.0;
  p.nx = n;
  p.bc_x = {Boundary::zero_gradient, Boundary::zero_gradient};
  p.controls.t_final = t_final;
  p.controls.cfl = cfl;
  p.euler1d_ic = riemann_ic(rd);
  p.riemann = rd;
  return p;
}

inline ProblemSpec euler2d(std::string id, std::string desc, double lo, double hi,
                           BoundaryPair bc_x, BoundaryPair bc_y, double t_final, double cfl,
                           std::function<Primitive2D(double, double)> w0) {
  ProblemSpec p;
  p.id = std::move(id);
  p.description = std::move(desc);
  p.equation = Equation::euler2d;
  p.x0 = p.y0 = lo;
  p.x1 = p.y1 = hi;
  p.nx = p.ny = 400;
  p.bc_x = bc_x;
  p.bc_y = bc_y;
  p.controls.t_final = t_final;
  p.controls.cfl = cfl;
  p.euler2d_ic = std::move(w0);
  return p;
}

// (p, rho, u, v) ordering used when quoting quadrant states
inline Primitive2D prv(double p, double rho, double u, double v) { return {rho, u, v, p}; }

}  // namespace detail

/// All twelve built-in problems with their default grids, times and steps.
[[nodiscard]] inline std::vector<ProblemSpec> builtin_problems() {
  using detail::prv;
  std::vector<ProblemSpec> out;

  {
    auto p = detail::advection("advection_square", "linear advection of a square wave on [-1,1]",
                               -1.0, 1.0, ic::square_wave, 2.0, 200);
    p.controls.dt_over_dx = 0.5;
    out.push_back(std::move(p));
  }
  {
    auto p = detail::advection("advection_bump", "linear advection of a cos^4 bump on [0,1]", 0.0,
                               1.0, ic::smooth_bump, 10.0, 200);
    p.controls.dt_over_dx = 0.5;
    out.push_back(std::move(p));
  }
  {
    auto p = detail::advection("advection_sin", "linear advection of sin(pi x) on [-1,1]", -1.0,
                               1.0, ic::sine, 0.5, 80);
    p.controls.cfl = 0.25;
    out.push_back(std::move(p));
  }
  {
    auto p = detail::advection("advection_sin4", "linear advection of sin^4(pi x) on [0,1]", 0.0,
                               1.0, ic::sine4, 0.5, 80);
    p.controls.cfl = 0.25;
    out.push_back(std::move(p));
  }
  {
    ProblemSpec p;
    p.id = "burgers_riemann";
    p.description = "Burgers: rarefaction at x=-1/3 and steady shock at x=1/3 on [-1,1]";
    p.equation = Equation::burgers;
    p.x0 = -1.0;
    p.x1 = 1.0;
    p.nx = 100;
    p.bc_x = {Boundary::periodic, Boundary::periodic};
    p.controls.t_final = 0.3;
    p.controls.cfl = 0.5;
    p.scalar_ic = ic::burgers_step;
    out.push_back(std::move(p));
  }
  out.push_back(detail::shock_tube("sod", "Sod shock tube on [-5,5]",
                                   {{1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, 0.0}, 1.3, 0.4, 200));
  out.push_back(detail::shock_tube("lax", "Lax shock tube on [-5,5]",
                                   {{0.445, 0.698, 3.528}, {0.5, 0.0, 0.571}, 0.0}, 1.3, 0.25, 200));
  {
    ProblemSpec p;
    p.id = "shu_osher";
    p.description = "Shu-Osher shock/entropy-wave interaction on [-5,5]";
    p.equation = Equation::euler1d;
    p.x0 = -5.0;
    p.x1 = 5.0;
    p.nx = 800;
    p.bc_x = {Boundary::zero_gradient, Boundary::zero_gradient};
    p.controls.t_final = 1.8;
    p.controls.cfl = 0.25;
    p.euler1d_ic = [](double x) -> Primitive1D {
      if (x < -4.0) return {3.857143, 2.629369, 10.33333};
      return {1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0};
    };
    out.push_back(std::move(p));
  }

  const BoundaryPair dirichlet{Boundary::dirichlet, Boundary::dirichlet};
  out.push_back(detail::euler2d(
      "riemann2d_a", "2D Riemann problem, quadrants split at x=y=0.5", 0.0, 1.0, dirichlet,
      dirichlet, 0.25, 0.45, [](double x, double y) {
        const bool right = x >= 0.5;
        const bool top = y >= 0.5;
        if (right && top) return prv(0.4, 0.5197, 0.1, 0.1);
        if (!right && top) return prv(1.0, 1.0, -0.6259, 0.1);
        if (!right && !top) return prv(1.0, 0.8, 0.1, 0.1);
        return prv(1.0, 1.0, 0.1, -0.6259);
      }));
  out.push_back(detail::euler2d(
      "riemann2d_b", "2D Riemann problem, quadrants split at x=y=0.8", 0.0, 1.0, dirichlet,
      dirichlet, 0.8, 0.15, [](double x, double y) {
        const bool right = x >= 0.8;
        const bool top = y >= 0.8;
        if (right && top) return prv(1.5, 1.5, 0.0, 0.0);
        if (!right && top) return prv(0.3, 0.5323, 1.206, 0.0);
        if (!right && !top) return prv(0.029, 0.138, 1.206, 1.206);
        return prv(0.3, 0.5323, 0.0, 1.206);
      }));
  {
    // quadrant of a circular explosion: symmetry walls at x=0 and y=0
    const BoundaryPair sym{Boundary::reflecting, Boundary::zero_gradient};
    auto p = detail::euler2d("explosion", "circular explosion, radius 0.4, quadrant (0,1.5)^2",
                             0.0, 1.5, sym, sym, 3.2, 0.15, [](double x, double y) {
                               if (x * x + y * y < 0.4 * 0.4) return prv(1.0, 1.0, 0.0, 0.0);
                               return prv(0.1, 0.125, 0.0, 0.0);
                             });
    p.subcell_samples = 16;
    out.push_back(std::move(p));
  }
  {
    const BoundaryPair walls{Boundary::reflecting, Boundary::reflecting};
    out.push_back(detail::euler2d("implosion", "implosion in a box, quadrant (0,0.3)^2", 0.0, 0.3,
                                  walls, walls, 2.5, 0.25, [](double x, double y) {
                                    if (std::abs(x) + std::abs(y) < 0.15) {
                                      return prv(0.14, 0.125, 0.0, 0.0);
                                    }
                                    return prv(1.0, 1.0, 0.0, 0.0);
                                  }));
  }
  return out;
}

[[nodiscard]] inline ProblemSpec find_problem(std::string_view id) {
  for (auto& p : builtin_problems()) {
    if (p.id == id) return p;
  }
  throw ConfigError("unknown problem '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------
// initial states
// ---------------------------------------------------------------------------

[[nodiscard]] inline std::vector<double> initial_scalar(const ProblemSpec& p, const Grid1D& g) {
  std::vector<double> u(g.n);
  for (std::size_t i = 0; i < g.n; ++i) u[i] = p.scalar_ic(g.x(i));
  return u;
}

[[nodiscard]] inline EulerState1D initial_euler1d(const ProblemSpec& p, const Grid1D& g) {
  EulerState1D s(g.n, p.gamma);
  for (std::size_t i = 0; i < g.n; ++i) s.set(i, p.euler1d_ic(g.x(i)));
  return s;
}

/// Point values at cell centers, or area-weighted primitives when
/// subcell_samples > 1 (averaged over a regular n x n subcell lattice).
[[nodiscard]] inline EulerState2D initial_euler2d(const ProblemSpec& p, const Grid2D& g) {
  EulerState2D s(g.x.n, g.y.n, p.gamma);
  const int m = std::max(1, p.subcell_samples);
  const double dx = g.x.dx();
  const double dy = g.y.dx();
  for (std::size_t j = 0; j < g.y.n; ++j) {
    for (std::size_t i = 0; i < g.x.n; ++i) {
      if (m == 1) {
        s.set(i, j, p.euler2d_ic(g.x.x(i), g.y.x(j)));
        continue;
      }
      Primitive2D avg{0.0, 0.0, 0.0, 0.0};
      const double xl = g.x.x0 + static_cast<double>(i) * dx;
      const double yl = g.y.x0 + static_cast<double>(j) * dy;
      for (int b = 0; b < m; ++b) {
        for (int a = 0; a < m; ++a) {
          const auto w = p.euler2d_ic(xl + (a + 0.5) * dx / m, yl + (b + 0.5) * dy / m);
          avg.rho += w.rho;
          avg.u += w.u;
          avg.v += w.v;
          avg.p += w.p;
        }
      }
      const double inv = 1.0 / (m * m);
      s.set(i, j, {avg.rho * inv, avg.u * inv, avg.v * inv, avg.p * inv});
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// exact solutions
// ---------------------------------------------------------------------------

/// Transport by characteristics on the periodic interval [x0, x1).
[[nodiscard]] inline double exact_advection(const std::function<double(double)>& u0, double a,
                                            double t, double x, double x0, double x1) {
  const double len = x1 - x0;
  double xi = std::fmod(x - a * t - x0, len);
  if (xi < 0.0) xi += len;
  return u0(x0 + xi);
}

/// Exact solution of Burgers' equation for the periodic step data on [-1, 1]:
/// a rarefaction fan centered at x = -1/3 and a stationary shock at x = 1/3.
/// Valid until the fan reaches the shock, t < 2/3.
[[nodiscard]] inline double exact_burgers_riemann_ic(double x, double t) {
  if (!(t >= 0.0) || t >= 2.0 / 3.0) {
    throw std::domain_error("exact_burgers_riemann_ic: t must lie in [0, 2/3)");
  }
  double xi = std::fmod(x + 1.0, 2.0);
  if (xi < 0.0) xi += 2.0;
  xi -= 1.0;
  if (t == 0.0) return ic::burgers_step(xi);
  constexpr double third = 1.0 / 3.0;
  const double fan_lo = -third - t;
  const double fan_hi = -third + t;
  if (xi < fan_lo) return -1.0;
  if (xi <= fan_hi) return (xi + third) / t;
  if (xi < third) return 1.0;
  return -1.0;
}

/// Exact values at the grid nodes at time t: u for scalar problems, density
/// for 1D Riemann problems. Empty when no exact solution is known.
[[nodiscard]] inline std::vector<double> exact_solution(const ProblemSpec& p, const Grid1D& g,
                                                        double t) {
  std::vector<double> out;
  if (p.equation == Equation::advection) {
    out.resize(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
      out[i] = exact_advection(p.scalar_ic, p.advection_speed, t, g.x(i), p.x0, p.x1);
    }
  } else if (p.id == "burgers_riemann") {
    out.resize(g.n);
    for (std::size_t i = 0; i < g.n; ++i) out[i] = exact_burgers_riemann_ic(g.x(i), t);
  } else if (p.riemann) {
    const ExactRiemannSolver rs(p.riemann->left, p.riemann->right, p.gamma);
    out.resize(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
      const double x = g.x(i) - p.riemann->interface;
      out[i] = t > 0.0 ? rs.sample(x / t).rho : p.euler1d_ic(g.x(i)).rho;
    }
  }
  return out;
}

}  // namespace weno3

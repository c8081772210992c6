/**
 * @file solver1d.hpp
 * @brief Method-of-lines systems for 1D scalar laws and the 1D Euler equations.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weno3/boundary.hpp"
#include "weno3/errors.hpp"
#include "weno3/euler.hpp"
#include "weno3/euler_line.hpp"
#include "weno3/reconstruction.hpp"
#include "weno3/time_integration.hpp"
#include "weno3/weights.hpp"

namespace weno3 {

/// Uniform 1D grid of n nodes at cell centers of [x0, x1].
struct Grid1D {
  double x0 = 0.0;
  double x1 = 1.0;
  std::size_t n = 0;

  [[nodiscard]] double dx() const noexcept { return (x1 - x0) / static_cast<double>(n); }
  [[nodiscard]] double x(std::size_t i) const noexcept {
    return x0 + (static_cast<double>(i) + 0.5) * dx();
  }
  void validate() const {
    if (n == 0) throw ConfigError("grid needs at least one cell");
    if (!(x1 > x0)) throw ConfigError("grid domain is empty");
  }
};

// ---------------------------------------------------------------------------
// scalar conservation laws
// ---------------------------------------------------------------------------

struct ScalarLaw {
  enum class Kind { advection, burgers };
  Kind kind = Kind::advection;
  double a = 1.0;  ///< advection speed

  [[nodiscard]] double flux(double u) const noexcept {
    return kind == Kind::advection ? a * u : 0.5 * u * u;
  }
};

/// max |f'(u)|: |a| for advection, max |u| for Burgers.
[[nodiscard]] inline double max_wave_speed_scalar(std::span<const double> u, const ScalarLaw& law) {
  if (law.kind == ScalarLaw::Kind::advection) return std::abs(law.a);
  double m = 0.0;
  for (double v : u) m = std::max(m, std::abs(v));
  return m;
}

class ScalarSystem1D {
 public:
  ScalarSystem1D(ScalarLaw law, Grid1D grid, BoundaryPair bc, WeightScheme scheme,
                 std::span<const double> initial = {})
      : law_(law), grid_(grid), bc_(bc), scheme_(std::move(scheme)) {
    grid_.validate();
    bc_.validate();
    validate(scheme_);
    const std::size_t np = grid_.n + 2 * kGhost;
    padded_.resize(np);
    flux_.resize(np);
    fp_.resize(np);
    fm_.resize(np);
    iface_.resize(grid_.n + 1);
    if (bc_.has_dirichlet()) {
      if (initial.size() != grid_.n) {
        throw ConfigError("dirichlet boundaries need the initial state to freeze ghost values");
      }
      frozen_.assign(np, 0.0);
      std::copy(initial.begin(), initial.end(), frozen_.begin() + kGhost);
      fill_ghosts(frozen_, grid_.n, {Boundary::zero_gradient, Boundary::zero_gradient});
      frozen_speed_ = max_wave_speed_scalar(frozen_, law_);
    }
  }

  [[nodiscard]] std::size_t components() const noexcept { return 1; }
  [[nodiscard]] std::size_t cells() const noexcept { return grid_.n; }
  [[nodiscard]] double cell_measure() const noexcept { return grid_.dx(); }
  [[nodiscard]] double reference_dx() const noexcept { return grid_.dx(); }
  [[nodiscard]] const Grid1D& grid() const noexcept { return grid_; }

  [[nodiscard]] double wave_speed(std::span<const double> u) const {
    return std::max({max_wave_speed_scalar(u, law_), frozen_speed_, kMinWaveSpeed});
  }

  [[nodiscard]] double stable_dt(std::span<const double> u, double cfl) const {
    return cfl * grid_.dx() / wave_speed(u);
  }

  void rhs(std::span<const double> u, std::span<double> out, int stage = 0) {
    const std::size_t n = grid_.n;
    std::copy(u.begin(), u.end(), padded_.begin() + kGhost);
    fill_ghosts(padded_, n, bc_, 1.0, frozen_);
    const double alpha = wave_speed(u);
    for (std::size_t j = 0; j < padded_.size(); ++j) flux_[j] = law_.flux(padded_[j]);
    lax_friedrichs_split(flux_, padded_, alpha, fp_, fm_);
    reconstruct_padded(scheme_, fp_, fm_, n, grid_.dx(), iface_);
    semidiscrete_rhs(iface_, grid_.dx(), out);
    inflow_[static_cast<std::size_t>(stage)][0] = iface_[0] - iface_[n];
  }

  [[nodiscard]] std::span<const double> boundary_inflow(int stage) const noexcept {
    return inflow_[static_cast<std::size_t>(stage)];
  }

  [[nodiscard]] std::span<const double> last_interface_fluxes() const noexcept { return iface_; }

 private:
  ScalarLaw law_;
  Grid1D grid_;
  BoundaryPair bc_;
  WeightScheme scheme_;
  std::vector<double> padded_, flux_, fp_, fm_, iface_, frozen_;
  double frozen_speed_ = 0.0;
  std::array<std::array<double, 1>, 3> inflow_{};
};

// ---------------------------------------------------------------------------
// 1D Euler
// ---------------------------------------------------------------------------

namespace detail {

/// max |u| + c over padded line values; throws on non-positive states.
template <std::size_t NC>
double line_wave_speed(const std::array<const double*, NC>& q, std::size_t count, double gamma,
                       std::size_t stride = 1) {
  double a = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t k = i * stride;
    const double rho = q[0][k];
    const double mn = q[1][k];
    const double mt = NC == 4 ? q[2][k] : 0.0;
    const double p = pressure(rho, mn, mt, q[NC - 1][k], gamma);
    if (!(rho > 0.0) || !(p > 0.0)) {
      throw SolverError("non-positive density or pressure", 0, i);
    }
    a = std::max(a, std::abs(mn / rho) + sound_speed(rho, p, gamma));
  }
  return a;
}

}  // namespace detail

class EulerSystem1D {
 public:
  static constexpr std::size_t kComponents = EulerState1D::kComponents;

  /// `initial` is only read to freeze ghost values on dirichlet sides.
  EulerSystem1D(Grid1D grid, double gamma, BoundaryPair bc, WeightScheme scheme,
                const EulerState1D* initial = nullptr)
      : grid_(grid), gamma_(gamma), bc_(bc), scheme_(std::move(scheme)) {
    grid_.validate();
    bc_.validate();
    validate(scheme_);
    if (!(gamma > 1.0)) throw ConfigError("gamma must exceed 1");
    ws_.resize(grid_.n);
    if (bc_.has_dirichlet()) {
      if (initial == nullptr || initial->size() != grid_.n) {
        throw ConfigError("dirichlet boundaries need the initial state to freeze ghost values");
      }
      const std::size_t np = grid_.n + 2 * kGhost;
      std::array<const double*, kComponents> ptr{};
      for (std::size_t c = 0; c < kComponents; ++c) {
        frozen_[c].assign(np, 0.0);
        const auto src = initial->component(c);
        std::copy(src.begin(), src.end(), frozen_[c].begin() + kGhost);
        fill_ghosts(frozen_[c], grid_.n, {Boundary::zero_gradient, Boundary::zero_gradient});
        ptr[c] = frozen_[c].data();
      }
      frozen_speed_ = detail::line_wave_speed<kComponents>(ptr, np, gamma_);
    }
  }

  [[nodiscard]] std::size_t components() const noexcept { return kComponents; }
  [[nodiscard]] std::size_t cells() const noexcept { return grid_.n; }
  [[nodiscard]] double cell_measure() const noexcept { return grid_.dx(); }
  [[nodiscard]] double reference_dx() const noexcept { return grid_.dx(); }
  [[nodiscard]] double gamma() const noexcept { return gamma_; }
  [[nodiscard]] const Grid1D& grid() const noexcept { return grid_; }

  [[nodiscard]] double wave_speed(std::span<const double> u) const {
    const std::size_t n = grid_.n;
    const std::array<const double*, kComponents> ptr{u.data(), u.data() + n, u.data() + 2 * n};
    return std::max({detail::line_wave_speed<kComponents>(ptr, n, gamma_), frozen_speed_,
                     kMinWaveSpeed});
  }

  [[nodiscard]] double stable_dt(std::span<const double> u, double cfl) const {
    return cfl * grid_.dx() / wave_speed(u);
  }

  void rhs(std::span<const double> u, std::span<double> out, int stage = 0) {
    const std::size_t n = grid_.n;
    const double alpha = wave_speed(u);
    std::array<double*, kComponents> dst{};
    for (std::size_t c = 0; c < kComponents; ++c) {
      auto& q = ws_.q[c];
      std::copy(u.begin() + static_cast<std::ptrdiff_t>(c * n),
                u.begin() + static_cast<std::ptrdiff_t>((c + 1) * n), q.begin() + kGhost);
      fill_ghosts(q, n, bc_, c == 1 ? -1.0 : 1.0, frozen_[c]);
      dst[c] = out.data() + c * n;
    }
    const std::size_t bad = std::visit(
        [&](const auto& sch) {
          return euler_line_rhs<kComponents>(ws_, n, grid_.dx(), alpha, gamma_, sch, dst, 1,
                                             false);
        },
        scheme_);
    if (bad != SolverError::npos) {
      throw SolverError("non-positive density or pressure", 0,
                        bad < kGhost ? 0 : std::min(bad - kGhost, n - 1));
    }
    auto& in = inflow_[static_cast<std::size_t>(stage)];
    for (std::size_t c = 0; c < kComponents; ++c) in[c] = ws_.flux_lo[c] - ws_.flux_hi[c];
  }

  [[nodiscard]] std::span<const double> boundary_inflow(int stage) const noexcept {
    return inflow_[static_cast<std::size_t>(stage)];
  }

 private:
  Grid1D grid_;
  double gamma_;
  BoundaryPair bc_;
  WeightScheme scheme_;
  EulerLineWorkspace<kComponents> ws_;
  std::array<std::vector<double>, kComponents> frozen_;
  double frozen_speed_ = 0.0;
  std::array<std::array<double, kComponents>, 3> inflow_{};
};

}  // namespace weno3

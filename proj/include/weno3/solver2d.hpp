/**
 * @file solver2d.hpp
 * @brief 2D Euler equations by dimension-by-dimension WENO sweeps.
 *
 * The x-sweep reconstructs f(w) along every row, the y-sweep g(w) along every
 * column; each line is independent, so rows (and then columns) are
 * distributed over OpenMP threads when available. Every line writes a
 * disjoint slice of the output and reductions run in a fixed order, so the
 * result does not depend on the thread count.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "weno3/boundary.hpp"
#include "weno3/errors.hpp"
#include "weno3/euler.hpp"
#include "weno3/euler_line.hpp"
#include "weno3/solver1d.hpp"
#include "weno3/time_integration.hpp"
#include "weno3/weights.hpp"

namespace weno3 {

struct Grid2D {
  Grid1D x;
  Grid1D y;

  [[nodiscard]] std::size_t cells() const noexcept { return x.n * y.n; }
};

namespace detail {

inline int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline int thread_id() noexcept {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

}  // namespace detail

class EulerSystem2D {
 public:
  static constexpr std::size_t kComponents = EulerState2D::kComponents;

  /// `initial` is only read to freeze ghost values on dirichlet sides.
  EulerSystem2D(Grid2D grid, double gamma, BoundaryPair bc_x, BoundaryPair bc_y,
                WeightScheme scheme, const EulerState2D* initial = nullptr)
      : grid_(grid), gamma_(gamma), bc_x_(bc_x), bc_y_(bc_y), scheme_(std::move(scheme)) {
    grid_.x.validate();
    grid_.y.validate();
    bc_x_.validate();
    bc_y_.validate();
    validate(scheme_);
    if (!(gamma > 1.0)) throw ConfigError("gamma must exceed 1");
    const std::size_t nx = grid_.x.n;
    const std::size_t ny = grid_.y.n;
    workspaces_.resize(static_cast<std::size_t>(std::max(1, detail::max_threads())));
    for (auto& ws : workspaces_) ws.resize(std::max(nx, ny));
    for (auto& v : row_lo_) v.resize(ny);
    for (auto& v : row_hi_) v.resize(ny);
    for (auto& v : col_lo_) v.resize(nx);
    for (auto& v : col_hi_) v.resize(nx);
    row_bad_.resize(ny);
    col_bad_.resize(nx);
    if (bc_x_.has_dirichlet() || bc_y_.has_dirichlet()) freeze(initial);
  }

  [[nodiscard]] std::size_t components() const noexcept { return kComponents; }
  [[nodiscard]] std::size_t cells() const noexcept { return grid_.cells(); }
  [[nodiscard]] double cell_measure() const noexcept { return grid_.x.dx() * grid_.y.dx(); }
  [[nodiscard]] double reference_dx() const noexcept { return grid_.x.dx(); }
  [[nodiscard]] double gamma() const noexcept { return gamma_; }
  [[nodiscard]] const Grid2D& grid() const noexcept { return grid_; }

  /// Global (max |u| + c, max |v| + c), including frozen ghost states.
  [[nodiscard]] DirectionalSpeeds wave_speeds(std::span<const double> u) const {
    const std::size_t nc = cells();
    DirectionalSpeeds a{frozen_speed_.x, frozen_speed_.y};
    for (std::size_t k = 0; k < nc; ++k) {
      const double rho = u[k];
      const double mx = u[nc + k];
      const double my = u[2 * nc + k];
      const double p = pressure(rho, mx, my, u[3 * nc + k], gamma_);
      if (!(rho > 0.0) || !(p > 0.0)) {
        throw SolverError("non-positive density or pressure", 0, k);
      }
      const double c = sound_speed(rho, p, gamma_);
      a.x = std::max(a.x, std::abs(mx / rho) + c);
      a.y = std::max(a.y, std::abs(my / rho) + c);
    }
    a.x = std::max(a.x, kMinWaveSpeed);
    a.y = std::max(a.y, kMinWaveSpeed);
    return a;
  }

  /// dt = cfl * min(dx / alpha_x, dy / alpha_y)
  [[nodiscard]] double stable_dt(std::span<const double> u, double cfl) const {
    const auto a = wave_speeds(u);
    return cfl * std::min(grid_.x.dx() / a.x, grid_.y.dx() / a.y);
  }

  void rhs(std::span<const double> u, std::span<double> out, int stage = 0) {
    const auto a = wave_speeds(u);
    dimension_split_rhs(u, out, a.x, a.y);
    auto& in = inflow_[static_cast<std::size_t>(stage)];
    const double dx = grid_.x.dx();
    const double dy = grid_.y.dx();
    // y-sweep components are ordered (rho, m_y, m_x, E)
    constexpr std::array<std::size_t, kComponents> ymap{0, 2, 1, 3};
    for (std::size_t c = 0; c < kComponents; ++c) {
      double sx = 0.0;
      for (std::size_t j = 0; j < grid_.y.n; ++j) sx += row_lo_[c][j] - row_hi_[c][j];
      in[c] = sx * dy;
    }
    for (std::size_t c = 0; c < kComponents; ++c) {
      double sy = 0.0;
      for (std::size_t i = 0; i < grid_.x.n; ++i) sy += col_lo_[c][i] - col_hi_[c][i];
      in[ymap[c]] += sy * dx;
    }
  }

  [[nodiscard]] std::span<const double> boundary_inflow(int stage) const noexcept {
    return inflow_[static_cast<std::size_t>(stage)];
  }

  /// -(dF/dx) - (dG/dy) with given global splitting speeds.
  void dimension_split_rhs(std::span<const double> u, std::span<double> out, double alpha_x,
                           double alpha_y) {
    const std::size_t nx = grid_.x.n;
    const std::size_t ny = grid_.y.n;
    const std::size_t nc = cells();
    const double dx = grid_.x.dx();
    const double dy = grid_.y.dx();
    const auto rows = static_cast<long long>(ny);
    const auto cols = static_cast<long long>(nx);

#pragma omp parallel for schedule(static)
    for (long long jj = 0; jj < rows; ++jj) {
      const auto j = static_cast<std::size_t>(jj);
      auto& ws = workspaces_[static_cast<std::size_t>(detail::thread_id())];
      std::array<double*, kComponents> dst{};
      for (std::size_t c = 0; c < kComponents; ++c) {
        const double* src = u.data() + c * nc + j * nx;
        std::copy(src, src + nx, ws.q[c].begin() + kGhost);
        fill_ghosts(std::span<double>(ws.q[c].data(), nx + 2 * kGhost), nx, bc_x_,
                    c == 1 ? -1.0 : 1.0, frozen_row(c, j));
        dst[c] = out.data() + c * nc + j * nx;
      }
      const std::size_t bad = std::visit(
          [&](const auto& sch) {
            return euler_line_rhs<kComponents>(ws, nx, dx, alpha_x, gamma_, sch, dst, 1, false);
          },
          scheme_);
      row_bad_[j] = bad;
      for (std::size_t c = 0; c < kComponents; ++c) {
        row_lo_[c][j] = ws.flux_lo[c];
        row_hi_[c][j] = ws.flux_hi[c];
      }
    }
    for (std::size_t j = 0; j < ny; ++j) {
      if (row_bad_[j] != SolverError::npos) {
        const std::size_t i = row_bad_[j] < kGhost ? 0 : std::min(row_bad_[j] - kGhost, nx - 1);
        throw SolverError("non-positive density or pressure", 0, j * nx + i);
      }
    }

    constexpr std::array<std::size_t, kComponents> ymap{0, 2, 1, 3};
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < cols; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      auto& ws = workspaces_[static_cast<std::size_t>(detail::thread_id())];
      std::array<double*, kComponents> dst{};
      for (std::size_t c = 0; c < kComponents; ++c) {
        const double* src = u.data() + ymap[c] * nc + i;
        double* q = ws.q[c].data() + kGhost;
        for (std::size_t j = 0; j < ny; ++j) q[j] = src[j * nx];
        fill_ghosts(std::span<double>(ws.q[c].data(), ny + 2 * kGhost), ny, bc_y_,
                    c == 1 ? -1.0 : 1.0, frozen_col(c, i));
        dst[c] = out.data() + ymap[c] * nc + i;
      }
      const std::size_t bad = std::visit(
          [&](const auto& sch) {
            return euler_line_rhs<kComponents>(ws, ny, dy, alpha_y, gamma_, sch, dst, nx, true);
          },
          scheme_);
      col_bad_[i] = bad;
      for (std::size_t c = 0; c < kComponents; ++c) {
        col_lo_[c][i] = ws.flux_lo[c];
        col_hi_[c][i] = ws.flux_hi[c];
      }
    }
    for (std::size_t i = 0; i < nx; ++i) {
      if (col_bad_[i] != SolverError::npos) {
        const std::size_t j = col_bad_[i] < kGhost ? 0 : std::min(col_bad_[i] - kGhost, ny - 1);
        throw SolverError("non-positive density or pressure", 0, j * nx + i);
      }
    }
  }

 private:
  std::span<const double> frozen_row(std::size_t c, std::size_t j) const noexcept {
    if (frozen_x_[c].empty()) return {};
    const std::size_t np = grid_.x.n + 2 * kGhost;
    return {frozen_x_[c].data() + j * np, np};
  }
  std::span<const double> frozen_col(std::size_t c, std::size_t i) const noexcept {
    if (frozen_y_[c].empty()) return {};
    const std::size_t np = grid_.y.n + 2 * kGhost;
    return {frozen_y_[c].data() + i * np, np};
  }

  void freeze(const EulerState2D* initial) {
    const std::size_t nx = grid_.x.n;
    const std::size_t ny = grid_.y.n;
    if (initial == nullptr || initial->nx() != nx || initial->ny() != ny) {
      throw ConfigError("dirichlet boundaries need the initial state to freeze ghost values");
    }
    constexpr BoundaryPair extend{Boundary::zero_gradient, Boundary::zero_gradient};
    constexpr std::array<std::size_t, kComponents> ymap{0, 2, 1, 3};
    const std::size_t npx = nx + 2 * kGhost;
    const std::size_t npy = ny + 2 * kGhost;
    for (std::size_t c = 0; c < kComponents; ++c) {
      const auto src = initial->component(c);
      frozen_x_[c].assign(ny * npx, 0.0);
      for (std::size_t j = 0; j < ny; ++j) {
        std::span<double> line(frozen_x_[c].data() + j * npx, npx);
        std::copy(src.begin() + static_cast<std::ptrdiff_t>(j * nx),
                  src.begin() + static_cast<std::ptrdiff_t>((j + 1) * nx), line.begin() + kGhost);
        fill_ghosts(line, nx, extend);
      }
      const auto srcy = initial->component(ymap[c]);
      frozen_y_[c].assign(nx * npy, 0.0);
      for (std::size_t i = 0; i < nx; ++i) {
        std::span<double> line(frozen_y_[c].data() + i * npy, npy);
        for (std::size_t j = 0; j < ny; ++j) line[kGhost + j] = srcy[j * nx + i];
        fill_ghosts(line, ny, extend);
      }
    }
    // speeds of the ghost states, both directions
    auto scan = [&](const std::array<std::vector<double>, kComponents>& f, bool x_lines) {
      const std::size_t count = f[0].size();
      const std::size_t np = x_lines ? npx : npy;
      for (std::size_t k = 0; k < count; ++k) {
        const std::size_t pos = k % np;
        if (pos >= kGhost && pos < np - kGhost) continue;
        const double rho = f[0][k];
        const double mn = f[1][k];
        const double mt = f[2][k];
        const double p = pressure(rho, mn, mt, f[3][k], gamma_);
        if (!(rho > 0.0) || !(p > 0.0)) throw ConfigError("frozen ghost state is not admissible");
        const double c = sound_speed(rho, p, gamma_);
        const double un = std::abs(mn / rho) + c;
        const double ut = std::abs(mt / rho) + c;
        frozen_speed_.x = std::max(frozen_speed_.x, x_lines ? un : ut);
        frozen_speed_.y = std::max(frozen_speed_.y, x_lines ? ut : un);
      }
    };
    scan(frozen_x_, true);
    scan(frozen_y_, false);
  }

  Grid2D grid_;
  double gamma_;
  BoundaryPair bc_x_;
  BoundaryPair bc_y_;
  WeightScheme scheme_;
  std::vector<EulerLineWorkspace<kComponents>> workspaces_;
  std::array<std::vector<double>, kComponents> frozen_x_;
  std::array<std::vector<double>, kComponents> frozen_y_;
  DirectionalSpeeds frozen_speed_;
  std::array<std::vector<double>, kComponents> row_lo_, row_hi_, col_lo_, col_hi_;
  std::vector<std::size_t> row_bad_, col_bad_;
  std::array<std::array<double, kComponents>, 3> inflow_{};
};

}  // namespace weno3

/**
 * @file euler_line.hpp
 * @brief Componentwise WENO right-hand side of the Euler equations along one
 *        padded grid line. Shared by the 1D driver and both 2D sweeps so that
 *        a y-invariant 2D run reproduces the 1D run bit for bit.
 */
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "weno3/errors.hpp"
#include "weno3/euler.hpp"
#include "weno3/reconstruction.hpp"
#include "weno3/weights.hpp"

namespace weno3 {

/// Line components are ordered (rho, m_normal, [m_tangential,] E).
template <std::size_t NC>
struct EulerLineWorkspace {
  static_assert(NC == 3 || NC == 4);
  std::array<std::vector<double>, NC> q;  ///< padded conservative values
  std::array<std::vector<double>, NC> f_plus;
  std::array<std::vector<double>, NC> f_minus;
  std::vector<double> iface;
  std::array<double, NC> flux_lo{};  ///< interface flux through the low face
  std::array<double, NC> flux_hi{};  ///< interface flux through the high face

  void resize(std::size_t n) {
    for (std::size_t c = 0; c < NC; ++c) {
      q[c].resize(n + 2 * kGhost);
      f_plus[c].resize(n + 2 * kGhost);
      f_minus[c].resize(n + 2 * kGhost);
    }
    iface.resize(n + 1);
  }
};

/// Evaluates -(F_{i+1/2} - F_{i-1/2}) / dx for every component of a line of n
/// interior nodes whose padded values (ghosts filled) are in ws.q. The result
/// for node i of component c goes to out[c][i * stride], added to the
/// existing value when `accumulate` is set.
///
/// Returns SolverError::npos on success, otherwise the padded index of the
/// first node with non-positive density or pressure.
template <std::size_t NC, class Scheme>
std::size_t euler_line_rhs(EulerLineWorkspace<NC>& ws, std::size_t n, double dx, double alpha,
                           double gamma, const Scheme& scheme, std::array<double*, NC> out,
                           std::size_t stride, bool accumulate) {
  constexpr std::size_t E = NC - 1;
  const std::size_t np = n + 2 * kGhost;
  std::size_t bad = SolverError::npos;
  for (std::size_t j = 0; j < np; ++j) {
    const double rho = ws.q[0][j];
    const double mn = ws.q[1][j];
    const double mt = NC == 4 ? ws.q[2][j] : 0.0;
    const double en = ws.q[E][j];
    const double p = pressure(rho, mn, mt, en, gamma);
    if (!(rho > 0.0) || !(p > 0.0)) {
      if (bad == SolverError::npos) bad = j;
      continue;
    }
    const double un = mn / rho;
    std::array<double, NC> f;
    f[0] = mn;
    f[1] = mn * un + p;
    if constexpr (NC == 4) f[2] = mt * un;
    f[E] = un * (en + p);
    for (std::size_t c = 0; c < NC; ++c) {
      const double aq = alpha * ws.q[c][j];
      ws.f_plus[c][j] = 0.5 * (f[c] + aq);
      ws.f_minus[c][j] = 0.5 * (f[c] - aq);
    }
  }
  if (bad != SolverError::npos) return bad;

  const double inv_dx = 1.0 / dx;
  for (std::size_t c = 0; c < NC; ++c) {
    reconstruct_padded(scheme, ws.f_plus[c], ws.f_minus[c], n, dx, ws.iface);
    ws.flux_lo[c] = ws.iface[0];
    ws.flux_hi[c] = ws.iface[n];
    double* o = out[c];
    if (accumulate) {
      for (std::size_t i = 0; i < n; ++i) o[i * stride] += -(ws.iface[i + 1] - ws.iface[i]) * inv_dx;
    } else {
      for (std::size_t i = 0; i < n; ++i) o[i * stride] = -(ws.iface[i + 1] - ws.iface[i]) * inv_dx;
    }
  }
  return SolverError::npos;
}

}  // namespace weno3

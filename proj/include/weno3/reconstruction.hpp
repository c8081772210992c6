/**
 * @file reconstruction.hpp
 * @brief Third-order WENO interface fluxes over one line of nodes.
 *
 * Lines are stored with kGhost ghost nodes on each side. For n interior
 * nodes the line has n + 2 kGhost entries and n + 1 interfaces, interface j
 * sitting between padded nodes j + kGhost - 1 and j + kGhost.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weno3/weights.hpp"

namespace weno3 {

inline constexpr std::size_t kGhost = 2;

/// Non-owning view of a padded line of node values.
struct Line1D {
  std::span<const double> values;
  std::size_t n_interior = 0;
  std::size_t n_ghost = kGhost;
  double dx = 1.0;

  void validate() const {
    if (n_ghost < kGhost) {
      throw std::invalid_argument("Line1D: at least 2 ghost cells are required per side");
    }
    if (values.size() != n_interior + 2 * n_ghost) {
      throw std::invalid_argument("Line1D: values length must equal n_interior + 2 n_ghost");
    }
    if (!(dx > 0.0)) throw std::invalid_argument("Line1D: dx must be positive");
  }
};

struct SplitFluxPair {
  std::vector<double> f_plus;
  std::vector<double> f_minus;
};

/// Global Lax-Friedrichs splitting f^{+-} = (f +- alpha u) / 2 into caller buffers.
inline void lax_friedrichs_split(std::span<const double> f, std::span<const double> u,
                                 double alpha, std::span<double> f_plus,
                                 std::span<double> f_minus) {
  if (!(alpha > 0.0)) throw std::invalid_argument("lax_friedrichs_split: alpha must be positive");
  if (f.size() != u.size() || f_plus.size() != f.size() || f_minus.size() != f.size()) {
    throw std::invalid_argument("lax_friedrichs_split: array lengths differ");
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double au = alpha * u[i];
    f_plus[i] = 0.5 * (f[i] + au);
    f_minus[i] = 0.5 * (f[i] - au);
  }
}

[[nodiscard]] inline SplitFluxPair lax_friedrichs_split(std::span<const double> f,
                                                        std::span<const double> u, double alpha) {
  SplitFluxPair out{std::vector<double>(f.size()), std::vector<double>(f.size())};
  lax_friedrichs_split(f, u, alpha, out.f_plus, out.f_minus);
  return out;
}

/// Upwind and centered linear candidates at x_{i+1/2}.
[[nodiscard]] inline constexpr std::pair<double, double> candidate_fluxes(
    const StencilValues& s) noexcept {
  return {1.5 * s.f0 - 0.5 * s.fm1, 0.5 * s.f0 + 0.5 * s.fp1};
}

template <class Scheme>
[[nodiscard]] inline double interface_flux_unchecked(const Scheme& sch, const StencilValues& s,
                                                     double dx) noexcept {
  const auto [w0, w1] = weights(sch, s, dx);
  const auto [up, cent] = candidate_fluxes(s);
  return w0 * up + w1 * cent;
}

[[nodiscard]] inline double interface_flux(const StencilValues& s, const WeightScheme& scheme,
                                           double dx) {
  const auto w = compute_weights(scheme, s, dx);
  const auto [up, cent] = candidate_fluxes(s);
  return w.w0 * up + w.w1 * cent;
}

namespace detail {

template <class Scheme>
inline void reconstruct_kernel(const Scheme& sch, const double* fp, const double* fm,
                               std::size_t n_interfaces, std::size_t first, double dx,
                               double* out) noexcept {
  for (std::size_t j = 0; j < n_interfaces; ++j) {
    const std::size_t i = first + j;  // interface i+1/2
    const double plus = interface_flux_unchecked(sch, {fp[i - 1], fp[i], fp[i + 1]}, dx);
    // f^- is reconstructed with the stencil mirrored about x_{i+1/2}
    const double minus = interface_flux_unchecked(sch, {fm[i + 2], fm[i + 1], fm[i]}, dx);
    out[j] = plus + minus;
  }
}

}  // namespace detail

/// Hot-path reconstruction on raw padded buffers (kGhost ghosts, n interior).
/// Writes n + 1 interface fluxes; no validation.
template <class Scheme>
inline void reconstruct_padded(const Scheme& sch, std::span<const double> f_plus,
                               std::span<const double> f_minus, std::size_t n, double dx,
                               std::span<double> out) noexcept {
  detail::reconstruct_kernel(sch, f_plus.data(), f_minus.data(), n + 1, kGhost - 1, dx,
                             out.data());
}

inline void reconstruct_padded(const WeightScheme& ws, std::span<const double> f_plus,
                               std::span<const double> f_minus, std::size_t n, double dx,
                               std::span<double> out) noexcept {
  std::visit([&](const auto& sch) { reconstruct_padded(sch, f_plus, f_minus, n, dx, out); }, ws);
}

/// Interface fluxes f^+_{i+1/2} + f^-_{i+1/2} for every interface of the line.
[[nodiscard]] inline std::vector<double> reconstruct_line(const Line1D& line_plus,
                                                          const Line1D& line_minus,
                                                          const WeightScheme& scheme) {
  line_plus.validate();
  line_minus.validate();
  if (line_plus.n_interior != line_minus.n_interior || line_plus.n_ghost != line_minus.n_ghost) {
    throw std::invalid_argument("reconstruct_line: plus and minus lines are not aligned");
  }
  validate(scheme);
  const std::size_t n = line_plus.n_interior;
  std::vector<double> out(n + 1);
  const std::size_t first = line_plus.n_ghost - 1;
  std::visit(
      [&](const auto& sch) {
        detail::reconstruct_kernel(sch, line_plus.values.data(), line_minus.values.data(), n + 1,
                                   first, line_plus.dx, out.data());
      },
      scheme);
  return out;
}

/// L(u)_i = -(F_{i+1/2} - F_{i-1/2}) / dx from n + 1 interface fluxes.
inline void semidiscrete_rhs(std::span<const double> interface_fluxes, double dx,
                             std::span<double> rhs) {
  if (interface_fluxes.size() != rhs.size() + 1) {
    throw std::invalid_argument("semidiscrete_rhs: need n + 1 interface fluxes for n cells");
  }
  const double inv_dx = 1.0 / dx;
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    rhs[i] = -(interface_fluxes[i + 1] - interface_fluxes[i]) * inv_dx;
  }
}

[[nodiscard]] inline std::vector<double> semidiscrete_rhs(std::span<const double> interface_fluxes,
                                                          double dx) {
  if (interface_fluxes.empty()) throw std::invalid_argument("semidiscrete_rhs: no fluxes");
  std::vector<double> rhs(interface_fluxes.size() - 1);
  semidiscrete_rhs(interface_fluxes, dx, rhs);
  return rhs;
}

}  // namespace weno3

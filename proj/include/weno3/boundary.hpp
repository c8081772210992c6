/**
 * @file boundary.hpp
 * @brief Ghost-node fill for padded lines.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "weno3/reconstruction.hpp"

namespace weno3 {

enum class Boundary : std::uint8_t {
  periodic,
  zero_gradient,
  reflecting,  ///< mirror about the face, normal momentum negated
  dirichlet,   ///< ghost nodes frozen at their initial values
};

[[nodiscard]] inline std::string_view to_string(Boundary b) noexcept {
  switch (b) {
    case Boundary::periodic: return "periodic";
    case Boundary::zero_gradient: return "zero_gradient";
    case Boundary::reflecting: return "reflecting";
    case Boundary::dirichlet: return "dirichlet";
  }
  return "unknown";
}

/// Boundary tags for the low and high end of one coordinate direction.
struct BoundaryPair {
  Boundary lo = Boundary::periodic;
  Boundary hi = Boundary::periodic;

  void validate() const {
    if ((lo == Boundary::periodic) != (hi == Boundary::periodic)) {
      throw std::invalid_argument("periodic boundaries must be set on both sides");
    }
  }
  [[nodiscard]] bool has_dirichlet() const noexcept {
    return lo == Boundary::dirichlet || hi == Boundary::dirichlet;
  }
};

/// Fill the kGhost ghost nodes on both ends of a padded line of n interior
/// nodes. `reflect_sign` is applied by reflecting walls (-1 for the normal
/// momentum, +1 otherwise). `frozen` is the padded initial line and is only
/// read on dirichlet sides.
inline void fill_ghosts(std::span<double> padded, std::size_t n, BoundaryPair bc,
                        double reflect_sign = 1.0, std::span<const double> frozen = {}) {
  constexpr std::size_t g = kGhost;
  double* v = padded.data();
  for (std::size_t k = 0; k < g; ++k) {
    const std::size_t lo_ghost = g - 1 - k;  // k-th ghost away from the low face
    const std::size_t hi_ghost = g + n + k;
    switch (bc.lo) {
      case Boundary::periodic: v[lo_ghost] = v[g + n - 1 - k]; break;
      case Boundary::zero_gradient: v[lo_ghost] = v[g]; break;
      case Boundary::reflecting: v[lo_ghost] = reflect_sign * v[g + k]; break;
      case Boundary::dirichlet: v[lo_ghost] = frozen[lo_ghost]; break;
    }
    switch (bc.hi) {
      case Boundary::periodic: v[hi_ghost] = v[g + k]; break;
      case Boundary::zero_gradient: v[hi_ghost] = v[g + n - 1]; break;
      case Boundary::reflecting: v[hi_ghost] = reflect_sign * v[g + n - 1 - k]; break;
      case Boundary::dirichlet: v[hi_ghost] = frozen[hi_ghost]; break;
    }
  }
}

}  // namespace weno3

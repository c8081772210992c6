/**
 * @file euler.hpp
 * @brief Ideal-gas Euler states in conservative storage.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "weno3/errors.hpp"

namespace weno3 {

struct Primitive1D {
  double rho = 1.0;
  double u = 0.0;
  double p = 1.0;
};

struct Primitive2D {
  double rho = 1.0;
  double u = 0.0;
  double v = 0.0;
  double p = 1.0;
};

[[nodiscard]] inline double total_energy(double rho, double u, double v, double p,
                                         double gamma) noexcept {
  return p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v);
}

/// p = (gamma - 1)(E - (m_n^2 + m_t^2) / (2 rho)); m_t = 0 in 1D.
[[nodiscard]] inline double pressure(double rho, double mn, double mt, double E,
                                     double gamma) noexcept {
  return (gamma - 1.0) * (E - 0.5 * (mn * mn + mt * mt) / rho);
}

[[nodiscard]] inline double sound_speed(double rho, double p, double gamma) noexcept {
  return std::sqrt(gamma * p / rho);
}

/// Conservative 1D state, component-major: [rho | rho u | E].
class EulerState1D {
 public:
  static constexpr std::size_t kComponents = 3;

  EulerState1D() = default;
  EulerState1D(std::size_t n, double gamma) : n_(n), gamma_(gamma), data_(kComponents * n, 0.0) {
    if (!(gamma > 1.0)) throw std::invalid_argument("EulerState1D: gamma must exceed 1");
  }

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] double gamma() const noexcept { return gamma_; }

  std::span<double> rho() noexcept { return component(0); }
  std::span<double> mom() noexcept { return component(1); }
  std::span<double> energy() noexcept { return component(2); }
  [[nodiscard]] std::span<const double> rho() const noexcept { return component(0); }
  [[nodiscard]] std::span<const double> mom() const noexcept { return component(1); }
  [[nodiscard]] std::span<const double> energy() const noexcept { return component(2); }

  std::span<double> component(std::size_t c) noexcept { return {data_.data() + c * n_, n_}; }
  [[nodiscard]] std::span<const double> component(std::size_t c) const noexcept {
    return {data_.data() + c * n_, n_};
  }

  std::vector<double>& data() noexcept { return data_; }
  [[nodiscard]] const std::vector<double>& data() const noexcept { return data_; }

  void set(std::size_t i, const Primitive1D& w) noexcept {
    data_[i] = w.rho;
    data_[n_ + i] = w.rho * w.u;
    data_[2 * n_ + i] = total_energy(w.rho, w.u, 0.0, w.p, gamma_);
  }

  [[nodiscard]] Primitive1D primitive(std::size_t i) const noexcept {
    const double r = data_[i];
    const double m = data_[n_ + i];
    return {r, m / r, pressure(r, m, 0.0, data_[2 * n_ + i], gamma_)};
  }

 private:
  std::size_t n_ = 0;
  double gamma_ = 1.4;
  std::vector<double> data_;
};

/// Conservative 2D state on an nx-by-ny grid, x fastest, component-major:
/// [rho | rho u | rho v | E].
class EulerState2D {
 public:
  static constexpr std::size_t kComponents = 4;

  EulerState2D() = default;
  EulerState2D(std::size_t nx, std::size_t ny, double gamma)
      : nx_(nx), ny_(ny), gamma_(gamma), data_(kComponents * nx * ny, 0.0) {
    if (!(gamma > 1.0)) throw std::invalid_argument("EulerState2D: gamma must exceed 1");
  }

  [[nodiscard]] std::size_t nx() const noexcept { return nx_; }
  [[nodiscard]] std::size_t ny() const noexcept { return ny_; }
  [[nodiscard]] std::size_t cells() const noexcept { return nx_ * ny_; }
  [[nodiscard]] double gamma() const noexcept { return gamma_; }
  [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const noexcept {
    return j * nx_ + i;
  }

  std::span<double> rho() noexcept { return component(0); }
  std::span<double> mom_x() noexcept { return component(1); }
  std::span<double> mom_y() noexcept { return component(2); }
  std::span<double> energy() noexcept { return component(3); }
  [[nodiscard]] std::span<const double> rho() const noexcept { return component(0); }
  [[nodiscard]] std::span<const double> mom_x() const noexcept { return component(1); }
  [[nodiscard]] std::span<const double> mom_y() const noexcept { return component(2); }
  [[nodiscard]] std::span<const double> energy() const noexcept { return component(3); }

  std::span<double> component(std::size_t c) noexcept {
    return {data_.data() + c * cells(), cells()};
  }
  [[nodiscard]] std::span<const double> component(std::size_t c) const noexcept {
    return {data_.data() + c * cells(), cells()};
  }

  std::vector<double>& data() noexcept { return data_; }
  [[nodiscard]] const std::vector<double>& data() const noexcept { return data_; }

  void set(std::size_t i, std::size_t j, const Primitive2D& w) noexcept {
    const std::size_t k = index(i, j);
    const std::size_t c = cells();
    data_[k] = w.rho;
    data_[c + k] = w.rho * w.u;
    data_[2 * c + k] = w.rho * w.v;
    data_[3 * c + k] = total_energy(w.rho, w.u, w.v, w.p, gamma_);
  }

  [[nodiscard]] Primitive2D primitive(std::size_t i, std::size_t j) const noexcept {
    const std::size_t k = index(i, j);
    const std::size_t c = cells();
    const double r = data_[k];
    const double mx = data_[c + k];
    const double my = data_[2 * c + k];
    return {r, mx / r, my / r, pressure(r, mx, my, data_[3 * c + k], gamma_)};
  }

 private:
  std::size_t nx_ = 0;
  std::size_t ny_ = 0;
  double gamma_ = 1.4;
  std::vector<double> data_;
};

/// max |u| + c over the cells; throws SolverError on rho <= 0 or p <= 0.
[[nodiscard]] inline double max_wave_speed_euler(const EulerState1D& s) {
  double a = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto w = s.primitive(i);
    if (!(w.rho > 0.0) || !(w.p > 0.0)) {
      throw SolverError("non-positive density or pressure", 0, i);
    }
    a = std::max(a, std::abs(w.u) + sound_speed(w.rho, w.p, s.gamma()));
  }
  return a;
}

struct DirectionalSpeeds {
  double x = 0.0;  ///< max |u| + c
  double y = 0.0;  ///< max |v| + c
};

[[nodiscard]] inline DirectionalSpeeds max_wave_speed_euler(const EulerState2D& s) {
  DirectionalSpeeds a;
  for (std::size_t j = 0; j < s.ny(); ++j) {
    for (std::size_t i = 0; i < s.nx(); ++i) {
      const auto w = s.primitive(i, j);
      if (!(w.rho > 0.0) || !(w.p > 0.0)) {
        throw SolverError("non-positive density or pressure", 0, s.index(i, j));
      }
      const double c = sound_speed(w.rho, w.p, s.gamma());
      a.x = std::max(a.x, std::abs(w.u) + c);
      a.y = std::max(a.y, std::abs(w.v) + c);
    }
  }
  return a;
}

}  // namespace weno3

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weno3 {

/// Invalid user-facing configuration (problem, scheme, grid, controls).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A run that had to be aborted: non-finite values or loss of positivity.
class SolverError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  SolverError(const std::string& what, std::size_t step, std::size_t cell = npos)
      : std::runtime_error(what + " (step " + std::to_string(step) +
                           (cell == npos ? std::string() : ", cell " + std::to_string(cell)) + ")"),
        reason_(what),
        step_(step),
        cell_(cell) {}

  [[nodiscard]] const std::string& reason() const noexcept { return reason_; }
  [[nodiscard]] std::size_t step() const noexcept { return step_; }
  [[nodiscard]] std::size_t cell() const noexcept { return cell_; }

 private:
  std::string reason_;
  std::size_t step_;
  std::size_t cell_;
};

}  // namespace weno3

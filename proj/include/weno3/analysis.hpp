/**
 * @file analysis.hpp
 * @brief Error norms, grid-refinement convergence studies and oscillation
 *        metrics.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "weno3/driver.hpp"
#include "weno3/errors.hpp"
#include "weno3/problems.hpp"
#include "weno3/time_integration.hpp"
#include "weno3/weights.hpp"

namespace weno3 {

struct ErrorPair {
  double l1 = 0.0;
  double linf = 0.0;
};

/// l1 = dx sum |a - b|, linf = max |a - b|.
[[nodiscard]] inline ErrorPair error_norms(std::span<const double> numeric,
                                           std::span<const double> exact, double dx) {
  if (numeric.size() != exact.size()) {
    throw std::invalid_argument("error_norms: arrays have different lengths");
  }
  ErrorPair e;
  double sum = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    const double d = std::abs(numeric[i] - exact[i]);
    sum += d;
    e.linf = std::max(e.linf, d);
  }
  e.l1 = dx * sum;
  return e;
}

struct ConvergenceRow {
  std::size_t n = 0;
  double linf = 0.0;
  double rate_linf = -std::numeric_limits<double>::infinity();
  double l1 = 0.0;
  double rate_l1 = -std::numeric_limits<double>::infinity();
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;

  static constexpr const char* kHeader = "N,Linf,rate_Linf,L1,rate_L1";

  /// Errors with 5 decimals in scientific notation, rates with 2 decimals,
  /// "-Inf" where no coarser row exists.
  [[nodiscard]] std::string to_csv() const {
    std::string out = std::string(kHeader) + "\n";
    auto rate = [](double r) {
      if (std::isinf(r) && r < 0) return std::string("-Inf");
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f", r);
      return std::string(buf);
    };
    for (const auto& row : rows) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%zu,%.5e,%s,%.5e,%s\n", row.n, row.linf,
                    rate(row.rate_linf).c_str(), row.l1, rate(row.rate_l1).c_str());
      out += buf;
    }
    return out;
  }
};

/// log2(coarse / fine) for consecutive rows, -Inf on the first.
inline void fill_rates(ConvergenceReport& report) {
  for (std::size_t j = 0; j < report.rows.size(); ++j) {
    auto& r = report.rows[j];
    if (j == 0) {
      r.rate_linf = r.rate_l1 = -std::numeric_limits<double>::infinity();
      continue;
    }
    const auto& c = report.rows[j - 1];
    r.rate_linf = std::log2(c.linf / r.linf);
    r.rate_l1 = std::log2(c.l1 / r.l1);
  }
}

inline void validate_resolutions(std::span<const std::size_t> resolutions) {
  if (resolutions.empty()) throw ConfigError("convergence study needs at least one resolution");
  for (std::size_t j = 1; j < resolutions.size(); ++j) {
    if (resolutions[j] != 2 * resolutions[j - 1]) {
      throw ConfigError("convergence resolutions must double from one entry to the next");
    }
  }
}

/// Runs the problem at every resolution and measures the node-sampled error
/// of the primary variable against the exact solution.
[[nodiscard]] inline ConvergenceReport convergence_study(const ProblemSpec& problem,
                                                         const WeightScheme& scheme,
                                                         std::span<const std::size_t> resolutions,
                                                         const TimeControls& controls) {
  validate_resolutions(resolutions);
  if (problem.equation == Equation::euler2d || !problem.has_exact()) {
    throw ConfigError("problem '" + problem.id + "' has no exact solution for a convergence study");
  }
  ConvergenceReport report;
  for (const std::size_t n : resolutions) {
    const auto run = advance(problem, scheme, n, 0, controls);
    const auto exact = exact_solution(problem, run.grid_x, run.diagnostics.t);
    const auto e = error_norms(run.primary(), exact, run.grid_x.dx());
    report.rows.push_back({n, e.linf, 0.0, e.l1, 0.0});
  }
  fill_rates(report);
  return report;
}

struct OscillationMetrics {
  double overshoot = 0.0;
  double undershoot = 0.0;
  double total_variation = 0.0;
};

[[nodiscard]] inline OscillationMetrics oscillation_metrics(std::span<const double> field,
                                                            double ic_min, double ic_max) {
  OscillationMetrics m;
  if (field.empty()) return m;
  const auto [lo, hi] = std::minmax_element(field.begin(), field.end());
  m.overshoot = std::max(0.0, *hi - ic_max);
  m.undershoot = std::max(0.0, ic_min - *lo);
  for (std::size_t i = 0; i + 1 < field.size(); ++i) {
    m.total_variation += std::abs(field[i + 1] - field[i]);
  }
  return m;
}

}  // namespace weno3

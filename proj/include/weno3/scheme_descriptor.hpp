/**
 * @file scheme_descriptor.hpp
 * @brief Text form of a WeightScheme: family[:token]...[:param=value]...
 *
 *   js3[:eps=1e-6][:p=2]    z3[:eps=..]    n3[:eps=..]    pplus3[:eps=..]
 *   limiter:chi1 .. limiter:chi4    limiter:chi5:k=3
 */
#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

#include "weno3/errors.hpp"
#include "weno3/weights.hpp"

namespace weno3 {

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline double parse_double(std::string_view text, std::string_view what) {
  // from_chars for double is available in libstdc++ 11
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError("scheme descriptor: bad value for " + std::string(what) + ": '" +
                      std::string(text) + "'");
  }
  return v;
}

/// shortest text that parses back to the same double
inline std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace detail

/// Parses a descriptor. chi5 with k > 3 is rejected unless allow_unsafe_k.
[[nodiscard]] inline WeightScheme parse_scheme(std::string_view text, bool allow_unsafe_k = false) {
  const auto parts = detail::split(text, ':');
  const std::string_view family = parts.front();

  double eps = 1e-6;
  int p = 2;
  double k = 0.0;
  bool have_k = false;
  std::string_view limiter_tag;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto part = parts[i];
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) {
      if (family == "limiter" && limiter_tag.empty()) {
        limiter_tag = part;
        continue;
      }
      throw ConfigError("scheme descriptor: unexpected token '" + std::string(part) + "'");
    }
    const auto key = part.substr(0, eq);
    const auto val = part.substr(eq + 1);
    if (key == "eps" && family != "limiter") {
      eps = detail::parse_double(val, key);
    } else if (key == "p" && family == "js3") {
      const double pv = detail::parse_double(val, key);
      if (pv != std::floor(pv) || pv < 1.0 || pv > 64.0) {
        throw ConfigError("scheme descriptor: p must be a positive integer");
      }
      p = static_cast<int>(pv);
    } else if (key == "k" && family == "limiter") {
      k = detail::parse_double(val, key);
      have_k = true;
    } else {
      throw ConfigError("scheme descriptor: parameter '" + std::string(key) +
                        "' does not apply to '" + std::string(family) + "'");
    }
  }

  WeightScheme out;
  if (family == "js3") {
    out = scheme::Js3{eps, p};
  } else if (family == "z3") {
    out = scheme::Z3{eps};
  } else if (family == "n3") {
    out = scheme::N3{eps};
  } else if (family == "pplus3") {
    out = scheme::PPlus3{eps};
  } else if (family == "limiter") {
    static constexpr std::string_view tags[] = {"chi1", "chi2", "chi3", "chi4", "chi5"};
    int idx = -1;
    for (int t = 0; t < 5; ++t) {
      if (limiter_tag == tags[t]) idx = t;
    }
    if (idx < 0) {
      throw ConfigError("scheme descriptor: limiter needs one of chi1..chi5, got '" +
                        std::string(limiter_tag) + "'");
    }
    const auto tag = static_cast<LimiterTag>(idx);
    if (tag == LimiterTag::chi5) {
      if (!have_k) throw ConfigError("scheme descriptor: chi5 requires k=<value>");
      try {
        out = scheme::Limiter{LimiterKind::chi5(k, allow_unsafe_k)};
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    } else {
      if (have_k) throw ConfigError("scheme descriptor: k only applies to chi5");
      out = scheme::Limiter{LimiterKind::simple(tag)};
    }
  } else {
    throw ConfigError("scheme descriptor: unknown family '" + std::string(family) + "'");
  }
  try {
    validate(out);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return out;
}

/// Canonical descriptor with every parameter spelled out.
[[nodiscard]] inline std::string format_scheme(const WeightScheme& ws) {
  return std::visit(
      [](const auto& s) -> std::string {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, scheme::Js3>) {
          return "js3:eps=" + detail::format_double(s.epsilon) + ":p=" + std::to_string(s.p);
        } else if constexpr (std::is_same_v<S, scheme::Z3>) {
          return "z3:eps=" + detail::format_double(s.epsilon);
        } else if constexpr (std::is_same_v<S, scheme::N3>) {
          return "n3:eps=" + detail::format_double(s.epsilon);
        } else if constexpr (std::is_same_v<S, scheme::PPlus3>) {
          return "pplus3:eps=" + detail::format_double(s.epsilon);
        } else {
          const auto tag = s.kind.tag();
          std::string out = "limiter:chi" + std::to_string(static_cast<int>(tag) + 1);
          if (tag == LimiterTag::chi5) out += ":k=" + detail::format_double(s.kind.k());
          return out;
        }
      },
      ws);
}

/// Conventional plot label, e.g. "WENO-JS3", "WENO3-w0^1", "WENO3-w0,5^3".
[[nodiscard]] inline std::string display_name(const WeightScheme& ws) {
  return std::visit(
      [](const auto& s) -> std::string {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, scheme::Js3>) {
          return "WENO-JS3";
        } else if constexpr (std::is_same_v<S, scheme::Z3>) {
          return "WENO-Z3";
        } else if constexpr (std::is_same_v<S, scheme::N3>) {
          return "WENO-N3";
        } else if constexpr (std::is_same_v<S, scheme::PPlus3>) {
          return "WENO-P+3";
        } else {
          if (s.kind.tag() == LimiterTag::chi5) {
            return "WENO3-w0,5^" + detail::format_double(s.kind.k());
          }
          return "WENO3-w0^" + std::to_string(static_cast<int>(s.kind.tag()) + 1);
        }
      },
      ws);
}

}  // namespace weno3

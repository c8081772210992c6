/**
 * @file cli.hpp
 * @brief Command-line front end: config handling, run/convergence/compare
 *        commands and CSV + JSON artifact writing. Needs the vendored CLI11
 *        and nlohmann/json headers on the include path.
 *
 * Config files are flat JSON objects with the keys
 *   problem, scheme, nx, ny, cfl, dt_over_dx, t_final, gamma, out, name,
 *   unsafe_k, threads, resolutions
 * Every metadata sidecar is itself a valid config for the run it describes.
 */
#pragma once

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weno3/analysis.hpp"
#include "weno3/driver.hpp"
#include "weno3/errors.hpp"
#include "weno3/problems.hpp"
#include "weno3/scheme_descriptor.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weno3::cli {

using json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitSolver = 3;

struct RunConfig {
  std::string problem;
  std::string scheme = "limiter:chi5:k=3";
  std::size_t nx = 0;  ///< 0: problem default
  std::size_t ny = 0;
  std::optional<double> cfl;
  std::optional<double> dt_over_dx;
  std::optional<double> t_final;
  std::optional<double> gamma;
  std::string out = ".";
  std::string name;  ///< artifact file stem; derived when empty
  bool unsafe_k = false;
  int threads = 0;  ///< 0: runtime default
  std::vector<std::size_t> resolutions;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline json to_json(const RunConfig& c) {
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  json j;
  j["problem"] = c.problem;
  j["scheme"] = c.scheme;
  j["nx"] = c.nx;
  j["ny"] = c.ny;
  j["cfl"] = opt(c.cfl);
  j["dt_over_dx"] = opt(c.dt_over_dx);
  j["t_final"] = opt(c.t_final);
  j["gamma"] = opt(c.gamma);
  j["out"] = c.out;
  j["name"] = c.name;
  j["unsafe_k"] = c.unsafe_k;
  j["threads"] = c.threads;
  j["resolutions"] = c.resolutions;
  return j;
}

/// Keys outside the schema are rejected, except the result blocks that
/// metadata sidecars carry.
inline RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
  RunConfig c;
  auto opt = [](const json& v) -> std::optional<double> {
    if (v.is_null()) return std::nullopt;
    return v.get<double>();
  };
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "problem") c.problem = v.get<std::string>();
      else if (key == "scheme") c.scheme = v.get<std::string>();
      else if (key == "nx") c.nx = v.get<std::size_t>();
      else if (key == "ny") c.ny = v.get<std::size_t>();
      else if (key == "cfl") c.cfl = opt(v);
      else if (key == "dt_over_dx") c.dt_over_dx = opt(v);
      else if (key == "t_final") c.t_final = opt(v);
      else if (key == "gamma") c.gamma = opt(v);
      else if (key == "out") c.out = v.get<std::string>();
      else if (key == "name") c.name = v.get<std::string>();
      else if (key == "unsafe_k") c.unsafe_k = v.get<bool>();
      else if (key == "threads") c.threads = v.get<int>();
      else if (key == "resolutions") c.resolutions = v.get<std::vector<std::size_t>>();
      else if (key == "kind" || key == "results" || key == "runs") continue;
      else throw ConfigError("config: unknown key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return c;
}

inline RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  try {
    return config_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// resolution of defaults
// ---------------------------------------------------------------------------

struct ResolvedRun {
  RunConfig config;  ///< every field filled in, scheme in canonical form
  ProblemSpec problem;
  WeightScheme scheme;
  std::size_t nx = 0;
  std::size_t ny = 0;
  TimeControls controls;
};

inline ResolvedRun resolve(const RunConfig& c) {
  if (c.problem.empty()) throw ConfigError("no problem given");
  ResolvedRun r;
  r.problem = find_problem(c.problem);
  r.scheme = parse_scheme(c.scheme, c.unsafe_k);
  if (c.gamma) {
    if (!(*c.gamma > 1.0)) throw ConfigError("gamma must exceed 1");
    r.problem.gamma = *c.gamma;
  }
  r.controls = r.problem.controls;
  if (c.t_final) r.controls.t_final = *c.t_final;
  if (c.cfl && c.dt_over_dx) throw ConfigError("give either cfl or dt_over_dx, not both");
  if (c.dt_over_dx) {
    r.controls.dt_over_dx = *c.dt_over_dx;
  } else if (c.cfl) {
    r.controls.dt_over_dx.reset();
    r.controls.cfl = *c.cfl;
  }
  r.controls.validate();
  if (c.threads < 0) throw ConfigError("threads must be non-negative");
  r.nx = c.nx != 0 ? c.nx : r.problem.nx;
  r.ny = r.problem.equation == Equation::euler2d ? (c.ny != 0 ? c.ny : r.problem.ny) : 0;

  r.config = c;
  r.config.scheme = format_scheme(r.scheme);
  r.config.nx = r.nx;
  r.config.ny = r.ny;
  r.config.gamma = r.problem.gamma;
  r.config.t_final = r.controls.t_final;
  r.config.cfl = r.controls.dt_over_dx ? std::nullopt : std::optional<double>(r.controls.cfl);
  r.config.dt_over_dx = r.controls.dt_over_dx;
  return r;
}

// ---------------------------------------------------------------------------
// artifacts
// ---------------------------------------------------------------------------

struct Artifact {
  std::filesystem::path csv;
  std::filesystem::path meta;
};

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Descriptor text usable in file names.
inline std::string file_token(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (ch == ':') out += '_';
    else if (ch != '=') out += ch;
  }
  return out;
}

inline std::string snapshot_header(Equation e) {
  switch (e) {
    case Equation::advection:
    case Equation::burgers: return "x,u";
    case Equation::euler1d: return "x,rho,u,p";
    case Equation::euler2d: return "x,y,rho,u,v,p";
  }
  return {};
}

/// Node values of the primitive variables, one row per node.
inline std::string snapshot_csv(const RunResult& r) {
  std::string out = snapshot_header(r.equation) + "\n";
  const std::size_t n = r.cells();
  switch (r.equation) {
    case Equation::advection:
    case Equation::burgers:
      for (std::size_t i = 0; i < n; ++i) {
        out += fmt17(r.grid_x.x(i)) + "," + fmt17(r.state[i]) + "\n";
      }
      break;
    case Equation::euler1d:
      for (std::size_t i = 0; i < n; ++i) {
        const double rho = r.state[i];
        const double m = r.state[n + i];
        const double p = pressure(rho, m, 0.0, r.state[2 * n + i], r.gamma);
        out += fmt17(r.grid_x.x(i)) + "," + fmt17(rho) + "," + fmt17(m / rho) + "," + fmt17(p) +
               "\n";
      }
      break;
    case Equation::euler2d:
      for (std::size_t j = 0; j < r.grid_y.n; ++j) {
        for (std::size_t i = 0; i < r.grid_x.n; ++i) {
          const std::size_t k = j * r.grid_x.n + i;
          const double rho = r.state[k];
          const double mx = r.state[n + k];
          const double my = r.state[2 * n + k];
          const double p = pressure(rho, mx, my, r.state[3 * n + k], r.gamma);
          out += fmt17(r.grid_x.x(i)) + "," + fmt17(r.grid_y.x(j)) + "," + fmt17(rho) + "," +
                 fmt17(mx / rho) + "," + fmt17(my / rho) + "," + fmt17(p) + "\n";
        }
      }
      break;
  }
  return out;
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << text;
  if (!f) throw ConfigError("write failed for " + path.string());
}

inline int effective_threads(int requested) {
#ifdef _OPENMP
  if (requested > 0) omp_set_num_threads(requested);
  return omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

inline json diagnostics_json(const RunDiagnostics& d) {
  json j;
  j["t"] = d.t;
  j["steps"] = d.steps;
  j["min"] = d.min;
  j["max"] = d.max;
  j["total_initial"] = d.total_initial;
  j["total_final"] = d.total_final;
  j["boundary_inflow"] = d.boundary_inflow;
  j["conservation_drift"] = d.conservation_drift;
  return j;
}

inline std::string run_stem(const ResolvedRun& r) {
  if (!r.config.name.empty()) return r.config.name;
  std::string s = r.problem.id + "_" + file_token(r.config.scheme) + "_n" + std::to_string(r.nx);
  if (r.ny != 0) s += "x" + std::to_string(r.ny);
  return s;
}

/// Runs one simulation and writes <stem>.csv and <stem>.json into config.out.
inline Artifact cmd_run(const RunConfig& cfg, std::ostream& log) {
  const auto r = resolve(cfg);
  const int threads = effective_threads(r.config.threads);
  const auto t0 = std::chrono::steady_clock::now();
  const auto result = advance(r.problem, r.scheme, r.nx, r.ny, r.controls);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::filesystem::path dir(r.config.out);
  const std::string stem = run_stem(r);
  Artifact a{dir / (stem + ".csv"), dir / (stem + ".json")};
  write_file(a.csv, snapshot_csv(result));

  json meta = to_json(r.config);
  meta["kind"] = "run";
  json res;
  res["csv"] = a.csv.filename().string();
  res["scheme_label"] = display_name(r.scheme);
  res["equation"] = std::string(to_string(r.problem.equation));
  res["description"] = r.problem.description;
  res["dx"] = result.grid_x.dx();
  if (r.ny != 0) res["dy"] = result.grid_y.dx();
  res["threads"] = threads;
  res["wall_time_s"] = wall;
  res["diagnostics"] = diagnostics_json(result.diagnostics);
  meta["results"] = res;
  write_file(a.meta, meta.dump(2) + "\n");

  log << a.csv.string() << "\n" << a.meta.string() << "\n";
  return a;
}

/// Grid-refinement study over config.resolutions. Writes
/// <stem>_convergence.csv and .json and echoes the CSV to `log`.
inline Artifact cmd_convergence(const RunConfig& cfg, std::ostream& log) {
  auto r = resolve(cfg);
  if (cfg.resolutions.empty()) throw ConfigError("convergence needs a list of resolutions");
  validate_resolutions(cfg.resolutions);
  const int threads = effective_threads(r.config.threads);
  const auto t0 = std::chrono::steady_clock::now();
  const auto report = convergence_study(r.problem, r.scheme, cfg.resolutions, r.controls);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  r.config.nx = 0;
  const std::string stem = !r.config.name.empty()
                               ? r.config.name
                               : r.problem.id + "_" + file_token(r.config.scheme) + "_convergence";
  const std::filesystem::path dir(r.config.out);
  Artifact a{dir / (stem + ".csv"), dir / (stem + ".json")};
  const std::string text = report.to_csv();
  write_file(a.csv, text);

  json meta = to_json(r.config);
  meta["kind"] = "convergence";
  json rows = json::array();
  for (const auto& row : report.rows) {
    auto rate = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
    rows.push_back({{"n", row.n},
                    {"linf", row.linf},
                    {"rate_linf", rate(row.rate_linf)},
                    {"l1", row.l1},
                    {"rate_l1", rate(row.rate_l1)}});
  }
  meta["results"] = {{"csv", a.csv.filename().string()},
                     {"scheme_label", display_name(r.scheme)},
                     {"threads", threads},
                     {"wall_time_s", wall},
                     {"rows", rows}};
  write_file(a.meta, meta.dump(2) + "\n");
  log << text;
  return a;
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

inline std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("WENO3_DATA_DIR")) return env;
#ifdef WENO3_DATA_DIR
  return WENO3_DATA_DIR;
#else
  return "data";
#endif
}

inline constexpr const char* kShuOsherReference = "shu_osher_reference.csv";

/// Density of the stored fine-grid Shu-Osher run, linearly interpolated to
/// the nodes of `g`. Empty when the fixture is missing.
inline std::vector<double> shu_osher_reference(const Grid1D& g, const std::filesystem::path& dir) {
  std::ifstream in(dir / kShuOsherReference);
  if (!in) return {};
  std::vector<double> xs, rs;
  std::string line;
  std::getline(in, line);  // header x,rho,u,p
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    double x = 0, rho = 0;
    char comma = 0;
    ss >> x >> comma >> rho;
    xs.push_back(x);
    rs.push_back(rho);
  }
  if (xs.size() < 2) return {};
  std::vector<double> out(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    const double x = g.x(i);
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t k = static_cast<std::size_t>(it - xs.begin());
    k = std::clamp<std::size_t>(k, 1, xs.size() - 1);
    const double t = (x - xs[k - 1]) / (xs[k] - xs[k - 1]);
    out[i] = rs[k - 1] + std::clamp(t, 0.0, 1.0) * (rs[k] - rs[k - 1]);
  }
  return out;
}

/// Runs every config on a shared problem and grid; writes one CSV with the
/// primary variable (u, or density) per scheme plus an exact/reference
/// column when one exists.
inline Artifact cmd_compare(const std::vector<RunConfig>& cfgs, std::ostream& log) {
  if (cfgs.empty()) throw ConfigError("compare needs at least one scheme");
  std::vector<ResolvedRun> runs;
  for (const auto& c : cfgs) runs.push_back(resolve(c));
  const auto& first = runs.front();
  for (const auto& r : runs) {
    if (r.problem.id != first.problem.id) throw ConfigError("compare: configs use different problems");
    if (r.nx != first.nx || r.ny != first.ny) {
      throw ConfigError("compare: configs use different resolutions");
    }
    if (r.controls.t_final != first.controls.t_final) {
      throw ConfigError("compare: configs use different final times");
    }
  }
  for (std::size_t a = 0; a < runs.size(); ++a) {
    for (std::size_t b = a + 1; b < runs.size(); ++b) {
      if (runs[a].config.scheme == runs[b].config.scheme) {
        throw ConfigError("compare: scheme '" + runs[a].config.scheme + "' given twice");
      }
    }
  }
  const int threads = effective_threads(first.config.threads);

  std::vector<RunResult> results;
  json run_meta = json::array();
  for (const auto& r : runs) {
    const auto t0 = std::chrono::steady_clock::now();
    results.push_back(advance(r.problem, r.scheme, r.nx, r.ny, r.controls));
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json m = to_json(r.config);
    m["results"] = {{"scheme_label", display_name(r.scheme)},
                    {"wall_time_s", wall},
                    {"diagnostics", diagnostics_json(results.back().diagnostics)}};
    run_meta.push_back(m);
  }

  const auto& g = results.front().grid_x;
  std::vector<double> ref;
  std::string ref_name;
  if (first.problem.equation != Equation::euler2d && first.problem.has_exact()) {
    ref = exact_solution(first.problem, g, results.front().diagnostics.t);
    ref_name = "exact";
  } else if (first.problem.id == "shu_osher") {
    ref = shu_osher_reference(g, default_data_dir());
    if (!ref.empty()) ref_name = "reference";
  }

  const bool two_d = first.problem.equation == Equation::euler2d;
  std::string text = two_d ? "x,y" : "x";
  for (const auto& r : runs) text += "," + r.config.scheme;
  if (!ref.empty()) text += "," + ref_name;
  text += "\n";
  const std::size_t n = results.front().cells();
  for (std::size_t k = 0; k < n; ++k) {
    if (two_d) {
      text += fmt17(g.x(k % g.n)) + "," + fmt17(results.front().grid_y.x(k / g.n));
    } else {
      text += fmt17(g.x(k));
    }
    for (const auto& res : results) text += "," + fmt17(res.primary()[k]);
    if (!ref.empty()) text += "," + fmt17(ref[k]);
    text += "\n";
  }

  const std::string stem = !first.config.name.empty()
                               ? first.config.name
                               : first.problem.id + "_compare_n" + std::to_string(first.nx);
  const std::filesystem::path dir(first.config.out);
  Artifact a{dir / (stem + ".csv"), dir / (stem + ".json")};
  write_file(a.csv, text);
  json meta = to_json(first.config);
  meta["kind"] = "compare";
  meta["runs"] = run_meta;
  meta["results"] = {{"csv", a.csv.filename().string()},
                     {"reference_column", ref_name.empty() ? json(nullptr) : json(ref_name)},
                     {"threads", threads}};
  write_file(a.meta, meta.dump(2) + "\n");
  log << a.csv.string() << "\n" << a.meta.string() << "\n";
  return a;
}

inline void cmd_list_problems(std::ostream& out) {
  for (const auto& p : builtin_problems()) {
    std::string grid = std::to_string(p.nx);
    if (p.equation == Equation::euler2d) grid += "x" + std::to_string(p.ny);
    out << p.id << "\t" << to_string(p.equation) << "\t" << grid << "\t" << p.description << "\n";
  }
}

inline void cmd_list_schemes(std::ostream& out) {
  const std::vector<WeightScheme> all = {
      scheme::Js3{},
      scheme::Z3{},
      scheme::N3{},
      scheme::PPlus3{},
      scheme::Limiter{LimiterKind::simple(LimiterTag::chi1)},
      scheme::Limiter{LimiterKind::simple(LimiterTag::chi2)},
      scheme::Limiter{LimiterKind::simple(LimiterTag::chi3)},
      scheme::Limiter{LimiterKind::simple(LimiterTag::chi4)},
      scheme::Limiter{LimiterKind::chi5(1.0)},
      scheme::Limiter{LimiterKind::chi5(3.0)}};
  for (const auto& s : all) out << format_scheme(s) << "\t" << display_name(s) << "\n";
  out << "# chi5 accepts 1 <= k <= 3; larger k needs --unsafe-k\n";
}

// ---------------------------------------------------------------------------
// argument parsing
// ---------------------------------------------------------------------------

namespace detail {

struct Flags {
  std::vector<std::string> configs;
  std::vector<std::string> schemes;
  std::string problem;
  std::size_t nx = 0, ny = 0;
  double cfl = 0, dt_over_dx = 0, t_final = 0, gamma = 0;
  std::string out, name;
  bool unsafe_k = false;
  int threads = 0;
  std::vector<std::size_t> resolutions;

  CLI::Option *o_problem{}, *o_nx{}, *o_ny{}, *o_cfl{}, *o_dt{}, *o_t{}, *o_gamma{}, *o_out{},
      *o_name{}, *o_unsafe{}, *o_threads{}, *o_res{};

  void add(CLI::App* app, bool multi_config, bool with_resolutions) {
    if (multi_config) {
      app->add_option("--config", configs, "JSON config file (repeatable, one run each)");
      app->add_option("--scheme", schemes, "scheme descriptor (repeatable, one run each)");
    } else {
      app->add_option("--config", configs, "JSON config file")->expected(0, 1);
      app->add_option("--scheme", schemes, "scheme descriptor, e.g. limiter:chi5:k=3")
          ->expected(0, 1);
    }
    o_problem = app->add_option("--problem", problem, "problem id (see list-problems)");
    o_nx = app->add_option("--nx", nx, "cells in x (0: problem default)");
    o_ny = app->add_option("--ny", ny, "cells in y for 2D problems");
    o_cfl = app->add_option("--cfl", cfl, "CFL number");
    o_dt = app->add_option("--dt-over-dx", dt_over_dx, "fixed dt / dx");
    o_t = app->add_option("--t-final", t_final, "final time");
    o_gamma = app->add_option("--gamma", gamma, "ratio of specific heats");
    o_out = app->add_option("--out", out, "output directory");
    o_name = app->add_option("--name", name, "artifact file stem");
    o_unsafe = app->add_flag("--unsafe-k", unsafe_k, "allow chi5 with k > 3");
    o_threads = app->add_option("--threads", threads, "OpenMP threads (0: default)");
    if (with_resolutions) {
      o_res = app->add_option("--resolutions", resolutions, "doubling list, e.g. 80,160,320")
                  ->delimiter(',');
    }
  }

  /// Explicit flags win over config-file keys.
  void apply(RunConfig& c) const {
    if (o_problem->count()) c.problem = problem;
    if (o_nx->count()) c.nx = nx;
    if (o_ny->count()) c.ny = ny;
    if (o_cfl->count()) {
      c.cfl = cfl;
      c.dt_over_dx.reset();
    }
    if (o_dt->count()) {
      c.dt_over_dx = dt_over_dx;
      c.cfl.reset();
    }
    if (o_t->count()) c.t_final = t_final;
    if (o_gamma->count()) c.gamma = gamma;
    if (o_out->count()) c.out = out;
    if (o_name->count()) c.name = name;
    if (o_unsafe->count()) c.unsafe_k = unsafe_k;
    if (o_threads->count()) c.threads = threads;
    if (o_res != nullptr && o_res->count()) c.resolutions = resolutions;
  }

  [[nodiscard]] RunConfig single() const {
    RunConfig c = configs.empty() ? RunConfig{} : load_config(configs.front());
    if (!schemes.empty()) c.scheme = schemes.front();
    apply(c);
    return c;
  }

  [[nodiscard]] std::vector<RunConfig> many() const {
    std::vector<RunConfig> out_cfgs;
    for (const auto& path : configs) {
      RunConfig c = load_config(path);
      apply(c);
      out_cfgs.push_back(c);
    }
    for (const auto& s : schemes) {
      RunConfig c;
      c.scheme = s;
      apply(c);
      out_cfgs.push_back(c);
    }
    return out_cfgs;
  }
};

}  // namespace detail

/// Full command-line entry point. Returns the process exit status.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Third-order WENO solver for 1D/2D conservation laws", "weno3"};
  app.require_subcommand(1);

  detail::Flags run_flags, conv_flags, cmp_flags;
  auto* run = app.add_subcommand("run", "run one simulation and write a snapshot");
  run_flags.add(run, false, false);
  auto* conv = app.add_subcommand("convergence", "grid-refinement study against the exact solution");
  conv_flags.add(conv, false, true);
  auto* cmp = app.add_subcommand("compare", "run several schemes on one problem and grid");
  cmp_flags.add(cmp, true, false);
  auto* lp = app.add_subcommand("list-problems", "list built-in problems");
  auto* ls = app.add_subcommand("list-schemes", "list scheme descriptors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (run->parsed()) {
      (void)cmd_run(run_flags.single(), out);
    } else if (conv->parsed()) {
      (void)cmd_convergence(conv_flags.single(), out);
    } else if (cmp->parsed()) {
      (void)cmd_compare(cmp_flags.many(), out);
    } else if (lp->parsed()) {
      cmd_list_problems(out);
    } else if (ls->parsed()) {
      cmd_list_schemes(out);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SolverError& e) {
    err << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitOk;
}

}  // namespace weno3::cli

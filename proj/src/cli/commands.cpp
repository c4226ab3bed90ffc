// Copyright 2026 The fermicorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <fermicorr/cli.hpp>

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <fermicorr/bounds.hpp>
#include <fermicorr/critical.hpp>
#include <fermicorr/hubbard.hpp>
#include <fermicorr/particle.hpp>
#include <fermicorr/ree.hpp>

namespace fermicorr::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

struct CommonOptions {
  bool json = false;
  int jobs = 0;
};

struct SweepOptions {
  double T = 0.1;
  std::string r = "0.2:4:0.02";
  int components = SolverSettings{}.components;
  int restarts = SolverSettings{}.restarts;
  std::uint64_t seed = SolverSettings{}.seed;
  double tol = SolverSettings{}.tolerance;
  bool no_symmetry = false;
};

struct CriticalOptions {
  std::string picture = "both";
  std::string T;
  std::string T_log = "1e-3:0.3:30";
  double tol = 1e-3;
};

struct BoundsOptions {
  std::string model = "dimer";
  int centers = 3;
  std::string T = "0.05,0.1,0.5";
  std::string r = "0.1:8:0.05";
};

void emit(std::ostream& out, const Table& table, bool json) {
  if (json) {
    write_json(out, table);
  } else {
    write_csv(out, table);
  }
}

Table spectrum_table(const std::string& r_spec) {
  Table table;
  table.columns = {"r", "t", "E0", "E1", "E2", "E3", "E4", "E5"};
  for (double r : parse_grid(r_spec)) {
    const double t = std::exp(-r);
    const DimerSpectrum s = analytic_spectrum(t);
    std::vector<Cell> row{r, t};
    for (double e : s.energies) row.emplace_back(e);
    table.rows.push_back(std::move(row));
  }
  return table;
}

struct SweepRow {
  std::vector<Cell> cells;
  bool solver_failure = false;
  bool violation = false;
};

SweepRow sweep_row(double T, double r, const SolverSettings& settings) {
  const DimerParams p = DimerParams::from_distance(r);
  const DensityMatrix rho = thermal_state(p, T);
  const ModePartition part = dimer_partition();
  SweepRow out;
  std::string status = "ok";
  double e_mode = kNaN;
  try {
    const ReeResult ree = mode_entanglement(rho, part, true, settings);
    e_mode = ree.value.nats();
    if (!ree.converged) status = "not_converged";
  } catch (const SolverError& e) {
    e_mode = e.best().value.nats();
    status = "solver_failure";
    out.solver_failure = true;
  }
  double i_gc = kNaN, rhs = kInf, c_dyn = kNaN;
  if (T > 0.0) {
    const BoundReport b = wolf_bound_check(T, r);
    i_gc = b.I;
    rhs = b.rhs;
    const DynCorrRatio ratio = dyn_corr_ratio(T, r);
    if (ratio.defined) c_dyn = ratio.c_dyn;
    if (!b.satisfied) {
      status = "bound_violation";
      out.violation = true;
    }
  }
  out.cells = {T,
               r,
               p.t(),
               mode_correlation(rho, part, true).nats(),
               e_mode,
               nonfreeness(rho).nats(),
               quantum_nonfreeness(rho),
               mutual_info(rho, part).nats(),
               i_gc,
               rhs,
               c_dyn,
               status};
  return out;
}

int run_sweep(const SweepOptions& o, const CommonOptions& c, Table& table) {
  if (!(o.T >= 0.0)) throw UsageError("--T must be >= 0");
  if (o.components < 1 || o.restarts < 1) throw UsageError("--ree-components and --ree-restarts must be >= 1");
  const std::vector<double> grid = parse_grid(o.r);
  table.columns = {"T",     "r",      "t",    "C_mode_ssr", "E_mode_ssr", "C_part",
                   "E_part", "I_plain", "I_gc", "wolf_rhs",   "c_dyn",      "status"};
  std::vector<SweepRow> rows(grid.size());
  parallel_for(grid.size(), c.jobs, [&](std::size_t i) {
    SolverSettings s;
    s.components = o.components;
    s.max_components = std::max(s.max_components, o.components);
    s.restarts = o.restarts;
    s.seed = o.seed + i;
    s.tolerance = o.tol;
    s.use_symmetry = !o.no_symmetry;
    rows[i] = sweep_row(o.T, grid[i], s);
  });
  int code = kOk;
  for (auto& row : rows) {
    if (row.violation) code = kBoundViolation;
    if (row.solver_failure && code == kOk) code = kSolverFailure;
    table.rows.push_back(std::move(row.cells));
  }
  return code;
}

int run_critical(const CriticalOptions& o, const CommonOptions& c, Table& table) {
  std::vector<Picture> pictures;
  if (o.picture == "mode" || o.picture == "both") pictures.push_back(Picture::kMode);
  if (o.picture == "particle" || o.picture == "both") pictures.push_back(Picture::kParticle);
  if (pictures.empty()) throw UsageError("--picture must be mode, particle or both");
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  const std::vector<double> temps = o.T.empty() ? parse_log_grid(o.T_log) : parse_grid(o.T);
  for (double T : temps) {
    if (!(T > 0.0) || T > 1.0) throw UsageError("temperatures must lie in (0, 1]");
  }
  table.columns = {"picture", "T", "r_exact", "r_lowT", "r_asymptote", "status"};
  struct Task {
    Picture picture;
    double T;
  };
  std::vector<Task> tasks;
  for (Picture p : pictures) {
    for (double T : temps) tasks.push_back({p, T});
  }
  std::vector<std::vector<Cell>> rows(tasks.size());
  std::vector<char> failed(tasks.size(), 0);
  parallel_for(tasks.size(), c.jobs, [&](std::size_t i) {
    const auto [p, T] = tasks[i];
    std::string status = "ok";
    double exact = kNaN, low = kNaN;
    try {
      exact = p == Picture::kMode ? rcrit_mode_exact(T, o.tol) : rcrit_particle_exact(T, o.tol);
    } catch (const BracketError& e) {
      status = "bracket_failure";
      failed[i] = 1;
    }
    if (T <= 0.3) {
      try {
        low = p == Picture::kMode ? rcrit_mode_lowT(T) : rcrit_particle_lowT(T);
      } catch (const BracketError& e) {
        status = "bracket_failure";
        failed[i] = 1;
      }
    }
    rows[i] = {to_string(p), T, exact, low, asymptote(p, T), status};
  });
  table.rows = std::move(rows);
  for (char f : failed) {
    if (f) return kSolverFailure;
  }
  return kOk;
}

int run_bounds(const BoundsOptions& o, const CommonOptions& c, Table& table) {
  const bool chain = o.model == "chain";
  if (!chain && o.model != "dimer") throw UsageError("--model must be dimer or chain");
  if (chain && (o.centers < 2 || o.centers > kMaxChainCenters)) throw UsageError("--centers must be 2..4");
  const std::vector<double> temps = parse_grid(o.T);
  const std::vector<double> rs = parse_grid(o.r);
  for (double T : temps) {
    if (!(T > 0.0)) throw UsageError("temperatures must be positive");
  }
  table.columns = {"model", "centers", "T", "r", "t", "I", "rhs", "ratio", "satisfied"};
  std::vector<std::pair<double, double>> points;
  for (double T : temps) {
    for (double r : rs) points.emplace_back(T, r);
  }
  std::vector<std::vector<Cell>> rows(points.size());
  std::vector<char> violated(points.size(), 0);
  parallel_for(points.size(), c.jobs, [&](std::size_t i) {
    const auto [T, r] = points[i];
    const double t = std::exp(-r);
    const int centers = chain ? o.centers : 2;
    const BoundReport b =
        chain ? general_bound_check(ChainParams::uniform(centers, t), T) : wolf_bound_check(T, r);
    violated[i] = !b.satisfied;
    rows[i] = {o.model, static_cast<double>(centers), T, r, t, b.I, b.rhs, b.ratio,
               std::string(b.satisfied ? "true" : "false")};
  });
  table.rows = std::move(rows);
  for (char v : violated) {
    if (v) return kBoundViolation;
  }
  return kOk;
}

std::string joined_args(int argc, const char* const* argv) {
  std::ostringstream s;
  for (int i = 1; i < argc; ++i) s << (i > 1 ? " " : "") << argv[i];
  return s.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correlation and entanglement of small fermionic systems", "fermicorr"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonOptions common;
  common.jobs = default_jobs();
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "Emit JSON instead of CSV");
    sub->add_option("--jobs", common.jobs, "Worker threads (default: $FERMICORR_JOBS or 1)")->check(CLI::PositiveNumber);
  };

  std::string spectrum_r = "0:6:0.05";
  auto* spectrum = app.add_subcommand("spectrum", "Dimer energies E0..E5 over a distance grid");
  spectrum->add_option("--r", spectrum_r, "Distance grid start:stop:step or list")->capture_default_str();
  add_common(spectrum);

  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Correlation and entanglement measures along r at fixed T");
  sweep->add_option("--T", sweep_opts.T, "Temperature (0 = ground state)")->capture_default_str();
  sweep->add_option("--r", sweep_opts.r, "Distance grid")->capture_default_str();
  sweep->add_option("--ree-components", sweep_opts.components, "Initial product components")->capture_default_str();
  sweep->add_option("--ree-restarts", sweep_opts.restarts, "Optimizer starts per point")->capture_default_str();
  sweep->add_option("--seed", sweep_opts.seed, "Base seed; row i uses seed + i")->capture_default_str();
  sweep->add_option("--tol", sweep_opts.tol, "Relative stopping tolerance")->capture_default_str();
  sweep->add_flag("--no-symmetry", sweep_opts.no_symmetry, "Optimize without the symmetry reduction");
  add_common(sweep);

  CriticalOptions critical_opts;
  auto* critical = app.add_subcommand("critical", "Critical distances versus temperature");
  critical->add_option("--picture", critical_opts.picture, "mode, particle or both")->capture_default_str();
  auto* t_list = critical->add_option("--T", critical_opts.T, "Temperature grid or list");
  critical->add_option("--T-log", critical_opts.T_log, "Log-spaced grid start:stop:count")
      ->capture_default_str()
      ->excludes(t_list);
  critical->add_option("--tol", critical_opts.tol, "Bisection width for exact roots")->capture_default_str();
  add_common(critical);

  BoundsOptions bounds_opts;
  auto* bounds = app.add_subcommand("bounds", "Audit the coupling bound on thermal mutual information");
  bounds->add_option("--model", bounds_opts.model, "dimer or chain")->capture_default_str();
  bounds->add_option("--centers", bounds_opts.centers, "Chain length")->capture_default_str();
  bounds->add_option("--T", bounds_opts.T, "Temperature grid or list")->capture_default_str();
  bounds->add_option("--r", bounds_opts.r, "Distance grid; hopping t = exp(-r)")->capture_default_str();
  add_common(bounds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Table table;
  table.meta = {{"version", kVersion}, {"args", joined_args(argc, argv)}};
  int code = kOk;
  try {
    if (*spectrum) {
      table = [&] {
        Table t = spectrum_table(spectrum_r);
        t.meta = table.meta;
        return t;
      }();
      table.meta["command"] = "spectrum";
    } else if (*sweep) {
      table.meta["command"] = "sweep";
      table.meta["seed"] = std::to_string(sweep_opts.seed);
      code = run_sweep(sweep_opts, common, table);
    } else if (*critical) {
      table.meta["command"] = "critical";
      code = run_critical(critical_opts, common, table);
    } else if (*bounds) {
      table.meta["command"] = "bounds";
      code = run_bounds(bounds_opts, common, table);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  emit(out, table, common.json);
  if (code == kBoundViolation) err << "error: bound violated on at least one grid point\n";
  if (code == kSolverFailure) err << "error: solver failed on at least one grid point\n";
  return code;
}

}  // namespace fermicorr::cli

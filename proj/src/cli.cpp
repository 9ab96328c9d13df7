#include "dgf/cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dgf/descent.hpp"
#include "dgf/dynamics.hpp"
#include "dgf/influence.hpp"
#include "dgf/io.hpp"
#include "dgf/sampling.hpp"
#include "dgf/variational.hpp"

namespace dgf::cli {

namespace {

struct Instance {
  std::optional<InteractionMatrix> matrix;
  CentralityVector c;
};

Instance load_instance(const std::string& matrix_path,
                       const std::string& centrality_path) {
  if (!matrix_path.empty()) {
    InteractionMatrix C = validate_interaction_matrix(read_matrix_file(matrix_path));
    CentralityVector c = perron_left_eigenvector(C);
    return Instance{std::move(C), std::move(c)};
  }
  return Instance{std::nullopt, CentralityVector(read_vector_file(centrality_path))};
}

// Vertex-convergence regime detected without iterating: an explicit star
// topology, or a centrality score at the 1/2 bound. Star instances approach
// the center vertex only harmonically (the gap shrinks like 1/k), so waiting
// for the iteration to get within 1e-9 of the vertex is not practical.
std::optional<int> vertex_regime(const Instance& inst) {
  if (inst.matrix) {
    const TopologyReport report = star_topology(*inst.matrix);
    if (report.star_center) return report.star_center;
  }
  int arg = 0;
  for (int i = 1; i < inst.c.dim(); ++i) {
    if (inst.c[i] > inst.c[arg]) arg = i;
  }
  if (inst.c[arg] >= 0.5 - kSumTol) return arg;
  return std::nullopt;
}

void emit(std::ostream& out, const std::string& path, const std::string& content) {
  if (path.empty()) {
    out << content;
  } else {
    write_file_atomic(path, content);
  }
}

int report_vertex(int node, std::ostream& out, std::ostream& err) {
  out << "star: node " << node + 1 << "\n";
  err << "vertex: dynamics converge to the vertex of node " << node + 1 << "\n";
  return kVertex;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const InteractionMatrix C = validate_interaction_matrix(read_matrix_file(path));
  const TopologyReport report = star_topology(C);
  out << "n: " << C.dim() << "\n";
  out << "nonnegative: true\n";
  out << "row_stochastic: true\n";
  out << "zero_diagonal: true\n";
  out << "irreducible: " << (report.irreducible ? "true" : "false") << "\n";
  if (report.star_center) {
    out << "star: node " << *report.star_center + 1 << "\n";
  } else {
    out << "star: none\n";
  }
  return kOk;
}

int cmd_centrality(const std::string& matrix_path, double tol, long max_iter,
                   std::ostream& out) {
  const InteractionMatrix C = validate_interaction_matrix(read_matrix_file(matrix_path));
  const CentralityVector c = perron_left_eigenvector(C, tol, max_iter);
  out << "n: " << C.dim() << "\n";
  out << "c: " << format_vector(c.scores()) << "\n";
  out << "residual: " << format_double(c.residual()) << "\n";
  return kOk;
}

int cmd_fixed_point(const Instance& inst, double tol, long max_iter,
                    std::ostream& out, std::ostream& err) {
  if (const auto center = vertex_regime(inst)) {
    return report_vertex(*center, out, err);
  }
  const FixedPointResult fp = solve_fixed_point(inst.c, tol, max_iter);
  const KktReport kkt = kkt_report(fp.x, inst.c);
  out << "n: " << inst.c.dim() << "\n";
  out << "x: " << format_vector(fp.x.weights()) << "\n";
  out << "iterations: " << fp.iterations << "\n";
  out << "residual: " << format_double(fp.residual) << "\n";
  out << "nu: " << format_double(kkt.nu) << "\n";
  out << "max_stationarity: " << format_double(kkt.max_abs_stationarity()) << "\n";
  out << "feasibility: " << format_double(kkt.feasibility) << "\n";
  return kOk;
}

int cmd_iterate(const Instance& inst, const std::string& x0_path, std::uint64_t seed,
                bool seeded, int starts, int steps, bool use_md, double h,
                const std::string& out_path, std::ostream& out) {
  const int n = inst.c.dim();
  std::vector<SimplexPoint> initial;
  if (!x0_path.empty()) {
    initial.emplace_back(read_vector_file(x0_path));
  } else {
    SplitMix64 rng(seed);
    for (int s = 0; s < starts; ++s) {
      initial.push_back(sample_simplex_uniform(n, rng));
    }
  }
  (void)seeded;
  std::string content = "# start k";
  for (int i = 1; i <= n; ++i) content += " x" + std::to_string(i);
  content += "\n";
  for (size_t s = 0; s < initial.size(); ++s) {
    SimplexPoint x = initial[s];
    content += std::to_string(s) + " 0 " + format_vector(x.weights()) + "\n";
    if (x.is_vertex()) continue;  // vertices are fixed; a single record suffices
    for (int k = 1; k <= steps; ++k) {
      x = use_md ? entropic_md_step(x, subgradient(x, inst.c, h), h)
                 : df_map(x, inst.c);
      content += std::to_string(s) + " " + std::to_string(k) + " " +
                 format_vector(x.weights()) + "\n";
    }
  }
  emit(out, out_path, content);
  return kOk;
}

int cmd_grid(const Instance& inst, int resolution, double tol, long max_iter,
             const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (inst.c.dim() != 3) {
    throw UnsupportedDimension("grid output supports n = 3 only, got n = " +
                               std::to_string(inst.c.dim()));
  }
  if (const auto center = vertex_regime(inst)) {
    return report_vertex(*center, out, err);
  }
  const FixedPointResult fp = solve_fixed_point(inst.c, tol, max_iter);
  std::string csv = "x1,x2,x3,objective\n";
  scan_objective_grid(inst.c, resolution,
                      [&csv](int, int, const SimplexPoint& p, double value) {
                        csv += format_double(p[0]) + "," + format_double(p[1]) + "," +
                               format_double(p[2]) + "," + format_double(value) + "\n";
                      });
  csv += format_double(fp.x[0]) + "," + format_double(fp.x[1]) + "," +
         format_double(fp.x[2]) + "," +
         format_double(objective(fp.x, inst.c).canonical) + ",fixed_point\n";
  emit(out, out_path, csv);
  return kOk;
}

int cmd_kkt(const Instance& inst, const std::string& x_path, double tol,
            long max_iter, std::ostream& out, std::ostream& err) {
  std::optional<SimplexPoint> x;
  if (!x_path.empty()) {
    x.emplace(read_vector_file(x_path));
  } else {
    if (const auto center = vertex_regime(inst)) {
      return report_vertex(*center, out, err);
    }
    x = solve_fixed_point(inst.c, tol, max_iter).x;
  }
  const KktReport report = kkt_report(*x, inst.c);
  out << "n: " << inst.c.dim() << "\n";
  out << "x: " << format_vector(x->weights()) << "\n";
  out << "nu: " << format_double(report.nu) << "\n";
  out << "stationarity: " << format_vector(report.stationarity) << "\n";
  out << "max_stationarity: " << format_double(report.max_abs_stationarity()) << "\n";
  out << "feasibility: " << format_double(report.feasibility) << "\n";
  return kOk;
}

int cmd_dual(const Instance& inst, std::optional<double> nu_min,
             std::optional<double> nu_max, int samples, double tol, long max_iter,
             const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (const auto center = vertex_regime(inst)) {
    return report_vertex(*center, out, err);
  }
  const FixedPointResult fp = solve_fixed_point(inst.c, tol, max_iter);
  const double center = default_dual_center(fp.x);
  const double lo = nu_min.value_or(center - 10.0);
  const double hi = nu_max.value_or(center + 10.0);
  const DualScanResult scan = dual_scan(inst.c, lo, hi, samples);
  const auto [refined_nu, refined_zeta] = dual_maximize(inst.c, lo, hi);
  out << "n: " << inst.c.dim() << "\n";
  out << "nu_min: " << format_double(lo) << "\n";
  out << "nu_max: " << format_double(hi) << "\n";
  out << "samples: " << samples << "\n";
  out << "best_nu: " << format_double(scan.best_nu) << "\n";
  out << "best_zeta: " << format_double(scan.best_zeta) << "\n";
  out << "refined_nu: " << format_double(refined_nu) << "\n";
  out << "refined_zeta: " << format_double(refined_zeta) << "\n";
  out << "primal: " << format_double(scan.primal_value) << "\n";
  out << "gap: " << format_double(scan.gap) << "\n";
  if (!out_path.empty()) {
    std::string records;
    for (size_t i = 0; i < scan.nu_grid.size(); ++i) {
      records += format_double(scan.nu_grid[i]) + " " +
                 format_double(scan.zeta_values[i]) + "\n";
    }
    write_file_atomic(out_path, records);
  }
  return kOk;
}

// --- verify -----------------------------------------------------------

std::vector<int> random_permutation(int n, SplitMix64& rng) {
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(i + 1));
    std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]);
  }
  return p;
}

std::vector<double> gather(const std::vector<double>& v, const std::vector<int>& p) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[static_cast<size_t>(p[i])];
  return out;
}

SimplexPoint sample_interior(int n, SplitMix64& rng, double min_weight) {
  while (true) {
    SimplexPoint x = sample_simplex_uniform(n, rng);
    if (*std::min_element(x.weights().begin(), x.weights().end()) >= min_weight) {
      return x;
    }
  }
}

struct PropertyResult {
  std::string name;
  bool pass;
  std::string detail;
};

int cmd_verify(const std::string& matrix_path, const std::string& override_path,
               std::uint64_t seed, double tol, long max_iter, std::ostream& out,
               std::ostream& err) {
  const InteractionMatrix C = validate_interaction_matrix(read_matrix_file(matrix_path));
  const TopologyReport topo = star_topology(C);
  if (topo.star_center) {
    return report_vertex(*topo.star_center, out, err);
  }
  const CentralityVector true_c = perron_left_eigenvector(C);
  // The claimed centrality is checked against the dynamics computed from the
  // matrix itself, so a corrupted override shows up as failed certificates.
  const CentralityVector claimed =
      override_path.empty() ? true_c : CentralityVector(read_vector_file(override_path));
  if (claimed.dim() != C.dim()) {
    throw DomainError("centrality override dimension does not match the matrix");
  }
  const int n = C.dim();
  const FixedPointResult fp = solve_fixed_point(true_c, tol, max_iter);
  SplitMix64 rng(seed);
  std::vector<PropertyResult> results;

  {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const SimplexPoint x = sample_interior(n, rng, 1e-3);
      for (const double h : {0.1, 1.0, 10.0}) {
        const SimplexPoint md = entropic_md_step(x, subgradient(x, claimed, h), h);
        const SimplexPoint df = df_map(x, claimed);
        worst = std::max(worst, linf_distance(md.weights(), df.weights()));
      }
    }
    results.push_back({"md_equals_df", worst <= 1e-13,
                       "max err " + format_double(worst)});
  }
  {
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      SimplexPoint x = sample_interior(n, rng, 1e-3);
      DualCoordinates mu = mirror_to_dual(PositiveVector(x));
      for (int k = 0; k < 25; ++k) {
        mu = natural_gradient_step(mu, claimed);
        x = df_map(x, claimed);
      }
      worst = std::max(worst,
                       linf_distance(dual_to_primal(mu).entries(), x.weights()));
    }
    results.push_back({"ngd_equals_df", worst <= 1e-12,
                       "max err " + format_double(worst)});
  }
  {
    const KktReport kkt = kkt_report(fp.x, claimed);
    const bool pass = kkt.max_abs_stationarity() <= 1e-10 &&
                      std::fabs(kkt.feasibility) <= 1e-12;
    results.push_back({"kkt_certificate", pass,
                       "max stationarity " + format_double(kkt.max_abs_stationarity()) +
                           ", feasibility " + format_double(kkt.feasibility)});
  }
  {
    const CentralityVector back = c_from_xstar(fp.x);
    const double errv = linf_distance(back.scores(), claimed.scores());
    results.push_back({"centrality_round_trip", errv <= 1e-8,
                       "err " + format_double(errv)});
  }
  {
    double worst = 0.0;
    const FixedPointResult base = solve_fixed_point(claimed, tol, max_iter);
    for (int trial = 0; trial < 5; ++trial) {
      const std::vector<int> perm = random_permutation(n, rng);
      const CentralityVector pc(gather(claimed.scores(), perm));
      const FixedPointResult permuted = solve_fixed_point(pc, tol, max_iter);
      worst = std::max(worst, linf_distance(permuted.x.weights(),
                                            gather(base.x.weights(), perm)));
    }
    results.push_back({"permutation_equivariance", worst <= 1e-10,
                       "max err " + format_double(worst)});
  }
  if (n == 3) {
    const GridSample sample = grid_minimize(claimed, 400);
    const double dist = linf_distance(sample.point.weights(), fp.x.weights());
    results.push_back({"grid_oracle", dist <= 1.0 / 400 + 1e-12,
                       "argmin distance " + format_double(dist)});
  }
  {
    const SimplexPoint uniform = SimplexPoint::uniform(n);
    if (linf_distance(claimed.scores(), uniform.weights()) <= 1e-9) {
      const double dist = linf_distance(fp.x.weights(), uniform.weights());
      results.push_back({"centroid", dist <= 1e-10, "distance " + format_double(dist)});
    }
  }

  bool all_pass = true;
  std::string failed;
  for (const PropertyResult& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    if (!r.pass) {
      all_pass = false;
      failed += failed.empty() ? r.name : ", " + r.name;
    }
  }
  if (!all_pass) {
    err << "verification failed: " << failed << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"DeGroot-Friedkin opinion dynamics toolkit"};
  app.name("dgf");
  app.require_subcommand(1);
  // --h is a real option on iterate, so help gets no short flag.
  app.set_help_flag("--help", "print help and exit");
  const auto add_subcommand = [&app](const std::string& name,
                                     const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->set_help_flag("--help", "print help and exit");
    return cmd;
  };

  std::string matrix_path;
  std::string centrality_path;
  std::string x_path;
  std::string out_path;
  std::string override_path;
  double tol = 1e-12;
  long max_iter = 100000;
  double h = 1.0;
  std::uint64_t seed = 0;
  int starts = 6;
  int steps = 20;
  int resolution = 200;
  int samples = 2001;
  std::optional<double> nu_min;
  std::optional<double> nu_max;

  const auto add_instance_options = [&](CLI::App* cmd) {
    cmd->add_option("-m,--matrix", matrix_path, "interaction matrix JSON file");
    cmd->add_option("-c,--centrality", centrality_path, "centrality vector JSON file");
  };
  const auto add_solver_options = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol, "convergence tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", max_iter, "iteration cap")->check(CLI::PositiveNumber);
  };

  CLI::App* validate = add_subcommand(
      "validate", "Check matrix structure and report digraph topology");
  std::string validate_path;
  validate->add_option("matrix", validate_path, "interaction matrix JSON file")
      ->required();

  CLI::App* centrality = add_subcommand(
      "centrality", "Perron-Frobenius left eigenvector of a matrix");
  std::string centrality_matrix;
  centrality->add_option("matrix", centrality_matrix, "interaction matrix JSON file")
      ->required();
  double centrality_tol = 1e-14;
  centrality->add_option("--tol", centrality_tol, "residual tolerance")
      ->check(CLI::PositiveNumber);
  centrality->add_option("--max-iter", max_iter, "iteration cap")
      ->check(CLI::PositiveNumber);

  CLI::App* fixed_point = add_subcommand(
      "fixed-point", "Solve for the interior fixed point with a KKT summary");
  add_instance_options(fixed_point);
  add_solver_options(fixed_point);

  CLI::App* iterate_cmd = add_subcommand(
      "iterate", "Emit trajectory records from explicit or seeded starts");
  add_instance_options(iterate_cmd);
  iterate_cmd->add_option("--x0", x_path, "initial point JSON file");
  CLI::Option* seed_opt =
      iterate_cmd->add_option("--seed", seed, "seed for uniform simplex starts");
  iterate_cmd->add_option("--starts", starts, "number of seeded starts")
      ->check(CLI::PositiveNumber);
  iterate_cmd->add_option("--steps", steps, "map applications per start")
      ->check(CLI::NonNegativeNumber);
  CLI::Option* h_opt = iterate_cmd->add_option(
      "--h", h, "step through the mirror-descent engine with this step size");
  h_opt->check(CLI::PositiveNumber);
  iterate_cmd->add_option("-o,--out", out_path, "output file (default stdout)");

  CLI::App* grid = add_subcommand(
      "grid", "Write the objective over the barycentric grid as CSV (n = 3)");
  add_instance_options(grid);
  add_solver_options(grid);
  grid->add_option("--resolution", resolution, "grid resolution")
      ->check(CLI::Range(10, 100000));
  grid->add_option("-o,--out", out_path, "output CSV file (default stdout)");

  CLI::App* kkt = add_subcommand(
      "kkt", "KKT residuals at the solved fixed point or a given point");
  add_instance_options(kkt);
  add_solver_options(kkt);
  kkt->add_option("--x", x_path, "evaluate at this point instead of solving");

  CLI::App* dual = add_subcommand(
      "dual", "Scan the dual function and report the observed primal-dual gap");
  add_instance_options(dual);
  add_solver_options(dual);
  double nu_min_val = 0.0;
  double nu_max_val = 0.0;
  CLI::Option* nu_min_opt = dual->add_option("--nu-min", nu_min_val, "scan lower end");
  CLI::Option* nu_max_opt = dual->add_option("--nu-max", nu_max_val, "scan upper end");
  dual->add_option("--samples", samples, "grid sample count")
      ->check(CLI::Range(2, 10000000));
  dual->add_option("-o,--out", out_path, "write nu/zeta records to this file");

  CLI::App* verify = add_subcommand(
      "verify", "Run the cross-equivalence property suite on a matrix instance");
  std::string verify_path;
  verify->add_option("matrix", verify_path, "interaction matrix JSON file")->required();
  verify->add_option("--centrality-override", override_path,
                     "use this centrality vector in place of the computed one");
  verify->add_option("--seed", seed, "seed for the property samplers");
  add_solver_options(verify);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("dgf");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kIoParse;
  }

  const auto need_instance = [&]() -> Instance {
    if (matrix_path.empty() == centrality_path.empty()) {
      throw IoError("exactly one of --matrix or --centrality is required");
    }
    return load_instance(matrix_path, centrality_path);
  };

  try {
    if (app.got_subcommand(validate)) {
      return cmd_validate(validate_path, out);
    }
    if (app.got_subcommand(centrality)) {
      return cmd_centrality(centrality_matrix, centrality_tol, max_iter, out);
    }
    if (app.got_subcommand(fixed_point)) {
      return cmd_fixed_point(need_instance(), tol, max_iter, out, err);
    }
    if (app.got_subcommand(iterate_cmd)) {
      const bool seeded = seed_opt->count() > 0;
      if (x_path.empty() && !seeded) {
        throw IoError("iterate needs either --x0 or --seed");
      }
      if (!x_path.empty() && seeded) {
        throw IoError("--x0 and --seed are mutually exclusive");
      }
      return cmd_iterate(need_instance(), x_path, seed, seeded, starts, steps,
                         h_opt->count() > 0, h, out_path, out);
    }
    if (app.got_subcommand(grid)) {
      return cmd_grid(need_instance(), resolution, tol, max_iter, out_path, out, err);
    }
    if (app.got_subcommand(kkt)) {
      return cmd_kkt(need_instance(), x_path, tol, max_iter, out, err);
    }
    if (app.got_subcommand(dual)) {
      if (nu_min_opt->count() > 0) nu_min = nu_min_val;
      if (nu_max_opt->count() > 0) nu_max = nu_max_val;
      return cmd_dual(need_instance(), nu_min, nu_max, samples, tol, max_iter,
                      out_path, out, err);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(verify_path, override_path, seed, tol, max_iter, out, err);
    }
    err << "error: no command selected\n";
    return kIoParse;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoParse;
  } catch (const ValidationError& e) {
    err << "invalid: " << e.what() << "\n";
    return kInvalid;
  } catch (const ConvergedToVertex& e) {
    err << "vertex: " << e.what() << "\n";
    return kVertex;
  } catch (const NoConvergenceError& e) {
    err << "no convergence: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const UnsupportedDimension& e) {
    err << "unsupported dimension: " << e.what() << "\n";
    return kBadDimension;
  } catch (const DomainError& e) {
    err << "invalid: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace dgf::cli

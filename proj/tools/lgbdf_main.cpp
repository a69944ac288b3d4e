#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lgbdf/assembly.hpp"
#include "lgbdf/metrics.hpp"
#include "lgbdf/mesh.hpp"
#include "lgbdf/parallel.hpp"
#include "lgbdf/problems.hpp"
#include "lgbdf/scheme.hpp"
#include "lgbdf/space.hpp"
#include "lgbdf/sweep.hpp"

namespace {

using nlohmann::json;

lgbdf::DiagonalSplit split_from_name(const std::string& name) {
  if (name == "lower-left" || name == "lower_left") return lgbdf::DiagonalSplit::lower_left;
  if (name == "crisscross") return lgbdf::DiagonalSplit::crisscross;
  throw std::invalid_argument("unknown mesh split: " + name);
}

lgbdf::StartupMode startup_from_name(const std::string& name) {
  if (name == "exact") return lgbdf::StartupMode::exact;
  if (name == "rk") return lgbdf::StartupMode::rk;
  throw std::invalid_argument("unknown startup mode: " + name);
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

struct RunOptions {
  int n = 16;
  int k = 1;
  int q = 1;
  double dt = 0.01;
  double mu = 0.01;
  double a0 = 0.0;
  double T = 0.0;
  std::string variant = "conservative";
  std::string startup = "exact";
  std::string split = "lower-left";
  int quad_degree = 0;
  int time_quad = 3;
  int rk_substeps = 4;
  double cg_tol = 1e-12;
  int threads = 1;
  std::string out;
};

int cmd_run(const RunOptions& opt) {
  lgbdf::set_num_threads(opt.threads);
  lgbdf::ManufacturedProblem problem = lgbdf::rui_tabata_problem(opt.mu);
  problem.a0 = opt.a0;
  const double T = opt.T > 0 ? opt.T : problem.T;

  lgbdf::Mesh mesh = lgbdf::build_uniform_square_mesh(problem.lo, problem.hi, opt.n,
                                                      split_from_name(opt.split));
  lgbdf::LagrangeSpace space = lgbdf::build_space(mesh, opt.k);

  lgbdf::SchemeConfig config;
  config.q = opt.q;
  config.dt = opt.dt;
  config.mu = problem.mu;
  config.a0 = problem.a0;
  config.variant = lgbdf::variant_from_name(opt.variant);
  config.startup_mode = startup_from_name(opt.startup);
  config.quad_degree = opt.quad_degree;
  config.time_quad_points = opt.time_quad;
  config.tracing.substeps_per_dt = opt.rk_substeps;
  config.solver.rel_tol = opt.cg_tol;
  config.validate();

  const int quad = config.effective_quad_degree(opt.k);
  std::ofstream file;
  std::ostream& os = open_output(opt.out, file);
  os << "# N=" << opt.n << " k=" << opt.k << " q=" << opt.q << " dt=" << opt.dt
     << " mu=" << problem.mu << " a0=" << problem.a0 << " variant=" << opt.variant
     << " startup=" << opt.startup << " T=" << T << " split=" << opt.split
     << " quad_degree=" << quad << " threads=" << opt.threads << "\n";
  os << "t,mass,e_L2_inst\n";
  os.precision(17);

  auto observer = [&](const lgbdf::LevelRecord& rec, const lgbdf::ScalarField& field) {
    const double err = lgbdf::error_l2_final(field, problem, rec.t, quad);
    os << rec.t << "," << rec.mass << "," << err << "\n";
  };
  lgbdf::RunResult result = lgbdf::run(space, problem.transport(), config, T, observer);

  const double t_final = result.levels.back().t;
  std::cerr << "final t=" << t_final
            << " e_L2=" << lgbdf::error_l2_final(result.final_field, problem, t_final, quad)
            << " e_m=" << lgbdf::error_mass_final(result.final_field, problem, t_final, quad)
            << "\n";
  return 0;
}

lgbdf::SweepConfig sweep_config_from_json(const json& doc) {
  lgbdf::SweepConfig config;
  if (doc.contains("problem")) {
    const json& p = doc.at("problem");
    if (p.contains("mu")) config.mu = p.at("mu").get<double>();
    if (p.contains("a0")) config.a0 = p.at("a0").get<double>();
    if (p.contains("T")) config.T = p.at("T").get<double>();
  }
  if (doc.contains("startup")) config.startup = startup_from_name(doc.at("startup").get<std::string>());
  if (doc.contains("split")) config.split = split_from_name(doc.at("split").get<std::string>());
  if (doc.contains("quad_degree")) config.quad_degree = doc.at("quad_degree").get<int>();
  if (doc.contains("time_quad_points")) config.time_quad_points = doc.at("time_quad_points").get<int>();
  if (doc.contains("rk_substeps")) config.rk_substeps = doc.at("rk_substeps").get<int>();
  if (doc.contains("cg_tol")) config.cg_tol = doc.at("cg_tol").get<double>();

  if (!doc.contains("grid")) throw std::invalid_argument("sweep config missing \"grid\"");
  for (const json& cell : doc.at("grid")) {
    lgbdf::CaseSpec spec;
    spec.n = cell.at("N").get<int>();
    spec.k = cell.at("k").get<int>();
    spec.q = cell.at("q").get<int>();
    spec.dt = cell.at("dt").get<double>();
    config.grid.push_back(spec);
  }
  config.variants.clear();
  if (doc.contains("variants")) {
    for (const json& v : doc.at("variants"))
      config.variants.push_back(lgbdf::variant_from_name(v.get<std::string>()));
  } else {
    config.variants.push_back(lgbdf::Variant::conservative);
  }
  return config;
}

int cmd_sweep(const std::string& config_path, const std::string& out, int threads) {
  lgbdf::set_num_threads(threads);
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot open sweep config: " + config_path);
  json doc = json::parse(in);
  lgbdf::SweepConfig config = sweep_config_from_json(doc);
  lgbdf::ManufacturedProblem problem = lgbdf::rui_tabata_problem(config.mu);
  problem.a0 = config.a0;

  lgbdf::ConvergenceTable table = lgbdf::convergence_sweep(problem, config);

  std::ofstream file;
  std::ostream& os = open_output(out, file);
  std::vector<std::string> comments;
  {
    std::ostringstream head;
    head << "mu=" << config.mu << " a0=" << config.a0 << " T=" << (config.T > 0 ? config.T : problem.T)
         << " startup=" << (config.startup == lgbdf::StartupMode::exact ? "exact" : "rk")
         << " threads=" << threads;
    comments.push_back(head.str());
  }
  lgbdf::write_sweep_csv(os, table, comments);

  int failed = 0;
  for (const lgbdf::CaseResult& row : table.rows) {
    if (!row.failed) continue;
    ++failed;
    std::cerr << "case N=" << row.spec.n << " k=" << row.spec.k << " q=" << row.spec.q
              << " dt=" << row.spec.dt << " failed: " << row.error << "\n";
  }
  if (failed > 0) std::cerr << failed << " of " << table.rows.size() << " cases failed\n";
  return 0;
}

struct CompareOptions {
  int n = 32;
  int k = 3;
  int q = 3;
  std::vector<double> dts;
  double mu = 0.01;
  double a0 = 0.0;
  double T = 0.0;
  std::string startup = "exact";
  int threads = 1;
  std::string out;
};

int cmd_compare(const CompareOptions& opt) {
  lgbdf::set_num_threads(opt.threads);
  lgbdf::ManufacturedProblem problem = lgbdf::rui_tabata_problem(opt.mu);
  problem.a0 = opt.a0;

  lgbdf::SweepConfig config;
  config.mu = opt.mu;
  config.a0 = opt.a0;
  config.T = opt.T;
  config.startup = startup_from_name(opt.startup);
  config.variants = {lgbdf::Variant::conservative, lgbdf::Variant::nonconservative};

  std::ofstream file;
  std::ostream& os = open_output(opt.out, file);
  os << "dt,e_m_conservative,e_m_nonconservative,ratio\n";
  os.precision(17);
  for (double dt : opt.dts) {
    lgbdf::CaseSpec spec;
    spec.n = opt.n;
    spec.k = opt.k;
    spec.q = opt.q;
    spec.dt = dt;
    spec.variant = lgbdf::Variant::conservative;
    lgbdf::CaseResult cons = lgbdf::run_case(problem, spec, config);
    spec.variant = lgbdf::Variant::nonconservative;
    lgbdf::CaseResult nonc = lgbdf::run_case(problem, spec, config);
    for (const lgbdf::CaseResult* row : {&cons, &nonc}) {
      if (row->failed) std::cerr << "dt=" << dt << " failed: " << row->error << "\n";
    }
    const double ratio = nonc.e_m / cons.e_m;
    os << dt << "," << cons.e_m << "," << nonc.e_m << "," << ratio << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lagrange-Galerkin BDF solver for conservative advection-diffusion"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "time-step one configuration, emit per-level CSV");
  run->add_option("--N", run_opt.n, "mesh segments per edge")->check(CLI::PositiveNumber);
  run->add_option("--k", run_opt.k, "element degree")->check(CLI::Range(1, 5));
  run->add_option("--q", run_opt.q, "time-stepping order")->check(CLI::Range(1, 5));
  run->add_option("--dt", run_opt.dt, "time step")->check(CLI::PositiveNumber);
  run->add_option("--mu", run_opt.mu, "diffusion coefficient")->check(CLI::PositiveNumber);
  run->add_option("--a0", run_opt.a0, "reaction coefficient");
  run->add_option("--T", run_opt.T, "final time (default: problem horizon)");
  run->add_option("--variant", run_opt.variant, "conservative|nonconservative");
  run->add_option("--startup", run_opt.startup, "exact|rk");
  run->add_option("--split", run_opt.split, "lower-left|crisscross");
  run->add_option("--quad-degree", run_opt.quad_degree, "quadrature degree (0: automatic)");
  run->add_option("--time-quad", run_opt.time_quad, "Gauss points per step for the jacobian factor")
      ->check(CLI::Range(1, 5));
  run->add_option("--rk-substeps", run_opt.rk_substeps, "trace substeps per time step")
      ->check(CLI::PositiveNumber);
  run->add_option("--cg-tol", run_opt.cg_tol, "CG relative tolerance");
  run->add_option("--threads", run_opt.threads, "worker threads")->check(CLI::PositiveNumber);
  run->add_option("--out", run_opt.out, "output CSV path (default: stdout)");

  std::string sweep_config;
  std::string sweep_out;
  int sweep_threads = 1;
  CLI::App* sweep = app.add_subcommand("sweep", "run a JSON-configured convergence sweep");
  sweep->add_option("--config", sweep_config, "JSON sweep configuration")->required();
  sweep->add_option("--out", sweep_out, "output CSV path (default: stdout)");
  sweep->add_option("--threads", sweep_threads, "worker threads")->check(CLI::PositiveNumber);

  CompareOptions cmp_opt;
  CLI::App* compare = app.add_subcommand("compare", "conservative vs nonconservative mass error");
  compare->add_option("--N", cmp_opt.n, "mesh segments per edge")->check(CLI::PositiveNumber);
  compare->add_option("--k", cmp_opt.k, "element degree")->check(CLI::Range(1, 5));
  compare->add_option("--q", cmp_opt.q, "time-stepping order")->check(CLI::Range(1, 5));
  compare->add_option("--dts", cmp_opt.dts, "time steps to compare")->required()->delimiter(',');
  compare->add_option("--mu", cmp_opt.mu, "diffusion coefficient")->check(CLI::PositiveNumber);
  compare->add_option("--a0", cmp_opt.a0, "reaction coefficient");
  compare->add_option("--T", cmp_opt.T, "final time (default: problem horizon)");
  compare->add_option("--startup", cmp_opt.startup, "exact|rk");
  compare->add_option("--threads", cmp_opt.threads, "worker threads")->check(CLI::PositiveNumber);
  compare->add_option("--out", cmp_opt.out, "output CSV path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_opt);
    if (sweep->parsed()) return cmd_sweep(sweep_config, sweep_out, sweep_threads);
    if (compare->parsed()) return cmd_compare(cmp_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

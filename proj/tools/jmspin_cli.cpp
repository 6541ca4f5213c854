// jmspin: joint measurability checks, approximation distances and trade-off
// boundary curves for pairs of qubit spin observables.
//
// Exit codes: 0 success, 2 invalid parameters, 3 solver failure, 4 I/O failure.

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "jmspin/boundary.hpp"
#include "jmspin/distances.hpp"
#include "jmspin/measurability.hpp"
#include "jmspin/report.hpp"

namespace {

using namespace jmspin;

constexpr int kExitInvalid = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

struct RunConfig {
  std::string command;
  double theta_deg = 90.0;
  std::string metric = "statistical";
  int n_points = 101;
  double tol = kFeasibilityTol;
  std::uint64_t seed = 42;
  std::string output_path;

  double alpha = 1.0, beta = 1.0;
  std::string a = "0,0,0", b = "0,0,0", p = "1,0,0";
  std::optional<std::string> state;
  bool witness = false;
  double d1 = 0.0, d2 = 0.0;
  std::string figure = "fig2";
};

BlochVector parse_vector(const std::string& text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  double xyz[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? compact.find(',', pos) : compact.size();
    if (end == std::string::npos) throw Error(ErrorKind::InvalidArgument, "expected x,y,z but got '" + text + "'");
    const char* first = compact.data() + pos;
    const char* last = compact.data() + end;
    const auto r = std::from_chars(first, last, xyz[i]);
    if (r.ec != std::errc() || r.ptr != last)
      throw Error(ErrorKind::InvalidArgument, "bad vector component in '" + text + "'");
    pos = end + 1;
  }
  return {xyz[0], xyz[1], xyz[2]};
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SolverDidNotConverge: return kExitSolver;
    case ErrorKind::IoFailure: return kExitIo;
    default: return kExitInvalid;
  }
}

void print_op(std::ostream& os, const char* name, const HermitianOp& op) {
  os << name << ": scalar=" << format_fixed(op.scalar, 12) << " vec=(" << format_fixed(op.vec.x, 12) << ","
     << format_fixed(op.vec.y, 12) << "," << format_fixed(op.vec.z, 12)
     << ") min_eig=" << format_fixed(op.min_eigenvalue(), 12) << "\n";
}

void emit(const RunConfig& cfg, const std::string& contents) {
  if (cfg.output_path.empty() || cfg.output_path == "-")
    std::cout << contents;
  else
    write_text_file(cfg.output_path, contents);
}

int cmd_check(const RunConfig& cfg) {
  const BinaryObservable a = effect_from_parameters(cfg.alpha, parse_vector(cfg.a));
  const BinaryObservable b = effect_from_parameters(cfg.beta, parse_vector(cfg.b));
  const Classification c = classify(a, b, cfg.tol, cfg.seed);
  std::cout << to_string(c.verdict) << "\n"
            << "busch_margin: " << format_fixed(c.busch_margin) << "\n"
            << "feasibility_slack: " << format_fixed(c.feasibility.slack) << "\n";
  if (cfg.witness) {
    if (c.feasibility.feasible) {
      const JointPovm4 g = construct_joint_povm(a, b, cfg.tol, cfg.seed);
      print_op(std::cout, "G++", g.g_pp);
      print_op(std::cout, "G+-", g.g_pm);
      print_op(std::cout, "G-+", g.g_mp);
      print_op(std::cout, "G--", g.g_mm);
    } else {
      std::cerr << "no witness: oracle reports the pair infeasible\n";
    }
  }
  return 0;
}

int cmd_distance(const RunConfig& cfg) {
  const BinaryObservable p = sharp_spin(parse_vector(cfg.p));
  const BinaryObservable a = effect_from_parameters(cfg.alpha, parse_vector(cfg.a));
  const DeviationReport dev = deviation_report(p, a);
  std::cout << "worst_case_deviation: " << format_fixed(dev.worst) << "\n"
            << "average_deviation: " << format_fixed(dev.average) << "\n"
            << "statistical_distance: " << (dev.statistical ? format_fixed(*dev.statistical) : "n/a") << "\n"
            << "rms_distance: " << format_fixed(rms_distance(p, a)) << "\n";
  if (cfg.state) std::cout << "rms_noise: " << format_fixed(rms_noise(p, a, parse_vector(*cfg.state))) << "\n";
  if (a.is_unbiased(kInputTol)) {
    const RmsDecomposition d = rms_decomposition(p, a);
    std::cout << "rms_accuracy_part: " << format_fixed(d.accuracy_part) << "\n"
              << "rms_unsharpness_part: " << format_fixed(d.unsharpness_part) << "\n";
  }
  return 0;
}

int cmd_boundary(const RunConfig& cfg) {
  const ProblemInstance inst = ProblemInstance::from_degrees(cfg.theta_deg);
  const Metric metric = parse_metric(cfg.metric);
  emit(cfg, boundary_csv(cfg.theta_deg, metric, boundary_curve(inst, metric, cfg.n_points)));
  return 0;
}

int cmd_region(const RunConfig& cfg) {
  const ProblemInstance inst = ProblemInstance::from_degrees(cfg.theta_deg);
  const Metric metric = parse_metric(cfg.metric);
  const bool inside = region_membership(inst, cfg.d1, cfg.d2, metric);
  std::cout << (inside ? "inside" : "outside") << "\n";
  if (cfg.d1 >= 0.0 && cfg.d2 >= 0.0)
    std::cout << "margin: " << format_fixed(region_margin(inst, cfg.d1, cfg.d2, metric)) << "\n";
  return 0;
}

int cmd_figure_data(const RunConfig& cfg) {
  const Figure which = parse_figure(cfg.figure);
  const std::filesystem::path dir = std::filesystem::path(cfg.output_path.empty() ? "." : cfg.output_path);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::IoFailure, "cannot create '" + dir.string() + "': " + ec.message());
  for (const CsvFile& f : figure_data(which, cfg.n_points)) {
    const std::string path = (dir / f.name).string();
    write_text_file(path, f.contents);
    std::cout << path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("JMSPIN_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: JMSPIN_SEED is not an unsigned integer\n";
      return kExitInvalid;
    }
  }

  CLI::App app{"Joint measurability and approximation trade-offs for qubit spin observables"};
  app.require_subcommand(1);

  auto add_theta = [&](CLI::App* sub) {
    sub->add_option("--theta", cfg.theta_deg, "Angle between p and q in degrees, 0 < theta <= 90")
        ->check(CLI::Range(0.0, 90.0));
  };
  auto add_metric = [&](CLI::App* sub) {
    sub->add_option("--metric", cfg.metric, "Distance metric")->check(CLI::IsMember({"statistical", "rms"}));
  };

  auto* check = app.add_subcommand("check", "Decide joint measurability of two binary observables");
  check->add_option("--alpha", cfg.alpha, "Scalar part of A");
  check->add_option("--a", cfg.a, "Vector part of A as x,y,z");
  check->add_option("--beta", cfg.beta, "Scalar part of B");
  check->add_option("--b", cfg.b, "Vector part of B as x,y,z");
  check->add_option("--tol", cfg.tol, "Feasibility tolerance")->check(CLI::PositiveNumber);
  check->add_option("--seed", cfg.seed, "Seed for the oracle's random starts");
  check->add_flag("--witness", cfg.witness, "Print the joint POVM in Pauli coordinates");

  auto* dist = app.add_subcommand("distance", "Distances of A from the sharp spin observable along p");
  dist->add_option("--alpha", cfg.alpha, "Scalar part of A");
  dist->add_option("--a", cfg.a, "Vector part of A as x,y,z");
  dist->add_option("--p", cfg.p, "Unit direction of the sharp observable");
  dist->add_option("--state", cfg.state, "Bloch vector of a state for the rms noise");

  auto* bnd = app.add_subcommand("boundary", "Trade-off boundary curve as CSV");
  add_theta(bnd);
  add_metric(bnd);
  bnd->add_option("--points", cfg.n_points, "Number of d1 samples")->check(CLI::Range(2, 1000000));
  bnd->add_option("--out", cfg.output_path, "Output CSV path (default stdout)");
  bnd->add_option("--seed", cfg.seed, "Accepted for interface uniformity; the sweep is deterministic");

  auto* reg = app.add_subcommand("region", "Whether (d1, d2) admits jointly measurable approximations");
  add_theta(reg);
  add_metric(reg);
  reg->add_option("--d1", cfg.d1, "d(P, A)")->required();
  reg->add_option("--d2", cfg.d2, "d(Q, B)")->required();

  auto* fig = app.add_subcommand("figure-data", "Curves for theta = 30, 60, 90 degrees plus symmetric markers");
  fig->add_option("which", cfg.figure, "fig2 (statistical) or fig4 (rms)")->check(CLI::IsMember({"fig2", "fig4"}));
  fig->add_option("--points", cfg.n_points, "Points per curve")->check(CLI::Range(2, 1000000));
  fig->add_option("--out", cfg.output_path, "Output directory");
  fig->add_option("--seed", cfg.seed, "Accepted for interface uniformity; the sweep is deterministic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }
  if (fig->parsed() && fig->count("--points") == 0) cfg.n_points = kFigurePoints;

  try {
    if (check->parsed()) return cmd_check(cfg);
    if (dist->parsed()) return cmd_distance(cfg);
    if (bnd->parsed()) return cmd_boundary(cfg);
    if (reg->parsed()) return cmd_region(cfg);
    if (fig->parsed()) return cmd_figure_data(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

#include "jmspin/boundary.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "jmspin/ellipsoid.hpp"
#include "jmspin/golden_section.hpp"

namespace jmspin {
namespace {

constexpr double kAngleTol = 1e-10;  // outer search resolution
constexpr int kColdBrackets = 5;
constexpr int kWarmScan = 64;

struct Candidate {
  double param = 0.0;
  double value = std::numeric_limits<double>::infinity();
  BlochVector a{};
};

// Outer 1-D search shared by both numeric solvers. `value` maps the search
// parameter to (d2, a).
template <class Eval>
Candidate search_interval(Eval&& eval, double lo, double hi, const BlochVector& bisector,
                          std::optional<double> warm) {
  auto f = [&](double t) { return eval(t).first; };
  auto angle_to_bisector = [&](const BlochVector& a) {
    const double n = a.norm();
    return n > 0.0 ? std::acos(std::clamp(dot(a, bisector) / n, -1.0, 1.0)) : kPi;
  };
  auto better = [&](const Candidate& x, const Candidate& y) {
    if (x.value < y.value - 1e-15) return true;
    if (y.value < x.value - 1e-15) return false;
    return angle_to_bisector(x.a) < angle_to_bisector(y.a);
  };
  auto make = [&](double t) {
    const auto [v, a] = eval(t);
    return Candidate{t, v, a};
  };

  auto cold = [&] {
    Candidate best;
    const double width = (hi - lo) / kColdBrackets;
    for (int k = 0; k < kColdBrackets; ++k) {
      const double l = lo + width * k;
      const double h = k + 1 == kColdBrackets ? hi : lo + width * (k + 1);
      const auto m = opt::golden_section_minimize(f, l, h, kAngleTol);
      const Candidate c = make(m.x);
      if (k == 0 || better(c, best)) best = c;
    }
    return best;
  };

  if (hi - lo <= kAngleTol) return make(0.5 * (lo + hi));
  if (!warm) return cold();

  const double reach = 0.1 * (hi - lo) + 1e-6;
  const double wl = std::max(lo, *warm - reach), wh = std::min(hi, *warm + reach);
  Candidate local = wh > wl ? make(opt::golden_section_minimize(f, wl, wh, kAngleTol).x) : make(std::clamp(*warm, lo, hi));
  double scan_min = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= kWarmScan; ++k) scan_min = std::min(scan_min, f(lo + (hi - lo) * k / kWarmScan));
  if (scan_min < local.value - 1e-9) return cold();
  return local;
}

TradeoffPoint beyond_saturation(const ProblemInstance& inst, double d1, Metric metric) {
  const double cos_t = dot(inst.p(), inst.q());
  double t = 1.0;
  if (metric == Metric::Statistical) {
    const double sin_t = cross(inst.p(), inst.q()).norm();
    const double root = std::sqrt(std::max(4.0 * d1 * d1 - sin_t * sin_t, 0.0));
    if (cos_t + root <= 1.0)
      t = cos_t + root;
    else if (cos_t - root >= -1.0)
      t = cos_t - root;
    else
      t = -1.0;
  } else if (cos_t > 1e-15) {
    t = std::clamp((1.0 - 0.5 * d1 * d1) / cos_t, -1.0, 1.0);
  }
  TradeoffPoint pt;
  pt.d1 = d1;
  pt.d2 = 0.0;
  pt.a_opt = inst.q() * t;
  pt.b_opt = inst.q();
  pt.metric = metric;
  pt.theta = inst.theta();
  pt.search_param = t;
  return pt;
}

TradeoffPoint solve_statistical(const ProblemInstance& inst, double d1, std::optional<double> warm) {
  const BlochVector& p = inst.p();
  const BlochVector& q = inst.q();
  const BlochVector perp = inst.p_perp();
  const double radius = 2.0 * d1;
  // a = p - 2 d1 (cos s p + sin s p_perp); |a| <= 1 iff cos s >= d1.
  auto a_of = [&](double s) { return p - (p * std::cos(s) + perp * std::sin(s)) * radius; };
  auto eval = [&](double s) {
    const BlochVector a = a_of(s);
    return std::make_pair(0.5 * project_onto_busch_ellipsoid(a, q).distance, a);
  };
  const double reach = std::acos(std::clamp(d1, 0.0, 1.0));
  const Candidate best = search_interval(eval, -reach, reach, normalized(p + q), warm);
  if (!std::isfinite(best.value)) throw Error(ErrorKind::SolverDidNotConverge, "statistical boundary search diverged");

  TradeoffPoint pt;
  pt.d1 = d1;
  pt.a_opt = best.a;
  pt.b_opt = project_onto_busch_ellipsoid(best.a, q).closest;
  pt.d2 = 0.5 * distance(q, pt.b_opt);
  pt.metric = Metric::Statistical;
  pt.theta = inst.theta();
  pt.search_param = best.param;
  return pt;
}

TradeoffPoint solve_rms_numeric(const ProblemInstance& inst, double d1, std::optional<double> warm) {
  const BlochVector& p = inst.p();
  const BlochVector& q = inst.q();
  const BlochVector perp = inst.p_perp();
  const double along = 1.0 - 0.5 * d1 * d1;
  const double half_chord = std::sqrt(std::max(1.0 - along * along, 0.0));
  auto a_of = [&](double s) { return p * along + perp * s; };
  auto d2_of = [&](const BlochVector& a) {
    return std::sqrt(std::max(2.0 * (1.0 - busch_ellipsoid_support(a, q)), 0.0));
  };
  auto eval = [&](double s) {
    const BlochVector a = a_of(s);
    return std::make_pair(d2_of(a), a);
  };
  const Candidate best = search_interval(eval, -half_chord, half_chord, normalized(p + q), warm);
  if (!std::isfinite(best.value)) throw Error(ErrorKind::SolverDidNotConverge, "rms boundary search diverged");

  TradeoffPoint pt;
  pt.d1 = d1;
  pt.a_opt = best.a;
  // Support point of E(a) in direction q.
  const double c = best.a.norm();
  if (c == 0.0) {
    pt.b_opt = q;
  } else {
    const BlochVector axis = best.a / c;
    const BlochVector q_par = axis * dot(q, axis);
    const BlochVector mq2 = q_par + (q - q_par) * ((1.0 - c) * (1.0 + c));
    const double h = busch_ellipsoid_support(best.a, q);
    pt.b_opt = h > 0.0 ? mq2 / h : BlochVector{};
  }
  pt.d2 = metric_distance(Metric::Rms, q, pt.b_opt);
  pt.metric = Metric::Rms;
  pt.theta = inst.theta();
  pt.search_param = best.param;
  return pt;
}

TradeoffPoint solve_rms_analytic(const ProblemInstance& inst, double d1) {
  const RmsOptimum opt = rms_optimal_direction(inst, d1);
  TradeoffPoint pt;
  pt.d1 = d1;
  pt.a_opt = opt.direction;
  pt.b_opt = opt.direction;
  pt.d2 = std::sqrt(std::max(2.0 * (1.0 - std::cos(inst.theta() - opt.omega)), 0.0));
  pt.metric = Metric::Rms;
  pt.theta = inst.theta();
  pt.search_param = opt.omega;
  return pt;
}

std::vector<double> sweep_grid(const ProblemInstance& inst, Metric metric, int n_points) {
  if (n_points < 2) throw Error(ErrorKind::InvalidArgument, "boundary sweep needs at least 2 points");
  const double sat = saturation(inst, metric);
  std::vector<double> d1(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) d1[i] = sat * (static_cast<double>(i) / (n_points - 1));
  return d1;
}

void solve_chunk(const ProblemInstance& inst, Metric metric, RmsMethod method, const std::vector<double>& d1,
                 std::size_t chunk, std::vector<TradeoffPoint>& out) {
  const std::size_t begin = chunk * kSweepChunk, end = std::min(d1.size(), begin + kSweepChunk);
  SolveOptions options;
  options.rms_method = method;
  for (std::size_t i = begin; i < end; ++i) {
    out[i] = min_partner_distance(inst, d1[i], metric, options);
    options.warm_start = out[i].search_param;
  }
}

}  // namespace

const char* to_string(Metric m) noexcept { return m == Metric::Statistical ? "statistical" : "rms"; }

Metric parse_metric(std::string_view name) {
  if (name == "statistical") return Metric::Statistical;
  if (name == "rms") return Metric::Rms;
  throw Error(ErrorKind::InvalidArgument, "unknown metric '" + std::string(name) + "'");
}

double metric_distance(Metric metric, const BlochVector& target, const BlochVector& a) {
  if (metric == Metric::Statistical) return 0.5 * distance(target, a);
  return std::sqrt(std::max(2.0 * (1.0 - dot(a, target)), 0.0));
}

double saturation(const ProblemInstance& instance, Metric metric) {
  if (metric == Metric::Statistical) return 0.5 * std::sin(instance.theta());
  return std::sqrt(2.0 * (1.0 - dot(instance.p(), instance.q())));
}

double metric_range(Metric metric) { return metric == Metric::Statistical ? 1.0 : 2.0; }

SymmetricOptimum symmetric_optimum(const ProblemInstance& instance) {
  const double half = 0.5 * instance.theta();
  SymmetricOptimum s;
  s.lambda = 0.5 * (1.0 + std::cos(half) - std::sin(half));
  const BlochVector sum_dir = normalized(instance.p() + instance.q());
  const BlochVector diff_dir = normalized(instance.p() - instance.q());
  s.a = sum_dir * s.lambda + diff_dir * (1.0 - s.lambda);
  s.b = sum_dir * s.lambda - diff_dir * (1.0 - s.lambda);
  s.d_sym = 0.5 * distance(instance.p(), s.a);
  return s;
}

RmsOptimum rms_optimal_direction(const ProblemInstance& instance, double d1) {
  if (!(d1 >= 0.0) || d1 > 2.0)
    throw Error(ErrorKind::DistanceOutOfRange, "rms distance " + std::to_string(d1) + " outside [0, 2]");
  RmsOptimum r;
  r.omega = std::acos(std::clamp(1.0 - 0.5 * d1 * d1, -1.0, 1.0));
  r.direction = instance.p() * std::cos(r.omega) + instance.p_perp() * std::sin(r.omega);
  return r;
}

TradeoffPoint rms_symmetric_point(const ProblemInstance& instance) {
  const double d = std::sqrt(2.0 * (1.0 - std::cos(0.5 * instance.theta())));
  return solve_rms_analytic(instance, d);
}

TradeoffPoint min_partner_distance(const ProblemInstance& instance, double d1, Metric metric,
                                   const SolveOptions& options) {
  if (!(d1 >= 0.0) || d1 > metric_range(metric))
    throw Error(ErrorKind::DistanceOutOfRange,
                std::string(to_string(metric)) + " distance " + std::to_string(d1) + " out of range");
  if (d1 >= saturation(instance, metric)) return beyond_saturation(instance, d1, metric);
  if (metric == Metric::Statistical) return solve_statistical(instance, d1, options.warm_start);
  if (options.rms_method == RmsMethod::Numeric) return solve_rms_numeric(instance, d1, options.warm_start);
  return solve_rms_analytic(instance, d1);
}

std::vector<TradeoffPoint> boundary_curve_serial(const ProblemInstance& instance, Metric metric, int n_points,
                                                 RmsMethod rms_method) {
  const std::vector<double> d1 = sweep_grid(instance, metric, n_points);
  std::vector<TradeoffPoint> out(d1.size());
  const std::size_t chunks = (d1.size() + kSweepChunk - 1) / kSweepChunk;
  for (std::size_t k = 0; k < chunks; ++k) solve_chunk(instance, metric, rms_method, d1, k, out);
  return out;
}

std::vector<TradeoffPoint> boundary_curve(const ProblemInstance& instance, Metric metric, int n_points,
                                          RmsMethod rms_method) {
  const std::vector<double> d1 = sweep_grid(instance, metric, n_points);
  std::vector<TradeoffPoint> out(d1.size());
  const auto chunks = static_cast<std::ptrdiff_t>((d1.size() + kSweepChunk - 1) / kSweepChunk);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < chunks; ++k) {
    try {
      solve_chunk(instance, metric, rms_method, d1, static_cast<std::size_t>(k), out);
    } catch (...) {
#pragma omp critical(jmspin_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

double region_margin(const ProblemInstance& instance, double d1, double d2, Metric metric) {
  if (d1 >= saturation(instance, metric)) return std::numeric_limits<double>::infinity();
  return d2 - min_partner_distance(instance, d1, metric).d2;
}

bool region_membership(const ProblemInstance& instance, double d1, double d2, Metric metric) {
  if (!(d1 >= 0.0) || !(d2 >= 0.0)) return false;
  return region_margin(instance, d1, d2, metric) >= -kRegionTol;
}

std::optional<ApproximationPair> region_witness(const ProblemInstance& instance, double d1, double d2,
                                                Metric metric) {
  if (!region_membership(instance, d1, d2, metric)) return std::nullopt;
  const TradeoffPoint pt = min_partner_distance(instance, std::min(d1, metric_range(metric)), metric);
  return ApproximationPair{pt.a_opt, pt.b_opt};
}

}  // namespace jmspin

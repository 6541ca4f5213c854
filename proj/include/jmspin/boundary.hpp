#pragma once

// Optimal trade-off between approximating P by A and Q by B with (A, B)
// jointly measurable. All approximations are unbiased (alpha = beta = 1) and
// are searched in the plane spanned by p and q.

#include <optional>
#include <string_view>
#include <vector>

#include "jmspin/algebra.hpp"

namespace jmspin {

enum class Metric { Statistical, Rms };

const char* to_string(Metric m) noexcept;
// Throws InvalidArgument for anything but "statistical" or "rms".
Metric parse_metric(std::string_view name);

struct TradeoffPoint {
  double d1 = 0.0;
  double d2 = 0.0;
  BlochVector a_opt{};
  BlochVector b_opt{};
  Metric metric = Metric::Statistical;
  double theta = 0.0;
  // Outer search coordinate of the optimum, reused as a warm start by sweeps.
  double search_param = 0.0;
};

struct SymmetricOptimum {
  double lambda = 0.0;
  BlochVector a{};
  BlochVector b{};
  double d_sym = 0.0;
};

struct RmsOptimum {
  double omega = 0.0;
  BlochVector direction{};
};

// Distance of an unbiased vector a from the sharp observable along `target`.
double metric_distance(Metric metric, const BlochVector& target, const BlochVector& a);

// Smallest d1 at which B = Q becomes reachable: 1/2 sin(theta) or sqrt(2 (1 - cos theta)).
double saturation(const ProblemInstance& instance, Metric metric);
// Largest value the metric can take for unbiased A: 1 (statistical) or 2 (rms).
double metric_range(Metric metric);

SymmetricOptimum symmetric_optimum(const ProblemInstance& instance);

// Unit vector at omega = arccos(1 - d1^2 / 2) from p, rotated toward q.
// Throws DistanceOutOfRange unless 0 <= d1 <= 2.
RmsOptimum rms_optimal_direction(const ProblemInstance& instance, double d1);

// The a = b point with omega = theta / 2.
TradeoffPoint rms_symmetric_point(const ProblemInstance& instance);

enum class RmsMethod {
  Analytic,  // a = b on the unit circle
  Numeric,   // golden-section over the chord a.p = 1 - d1^2/2, support function inside
};

struct SolveOptions {
  RmsMethod rms_method = RmsMethod::Analytic;
  std::optional<double> warm_start;  // search_param of a nearby solution
};

// Minimal d(Q, B) over jointly measurable unbiased pairs with d(P, A) = d1.
// Beyond saturation the result is d2 = 0 with b_opt = q and a_opt on the
// segment [-q, q], as close to distance d1 from p as the segment allows.
// Throws DistanceOutOfRange for d1 outside [0, metric_range].
TradeoffPoint min_partner_distance(const ProblemInstance& instance, double d1, Metric metric,
                                   const SolveOptions& options = {});

inline constexpr std::size_t kSweepChunk = 16;

// n_points uniform steps of d1 over [0, saturation], ascending. Each chunk of
// kSweepChunk points is cold-started at its first point and warm-started along
// the rest, so the OpenMP and serial sweeps produce identical curves.
std::vector<TradeoffPoint> boundary_curve(const ProblemInstance& instance, Metric metric, int n_points,
                                          RmsMethod rms_method = RmsMethod::Analytic);
std::vector<TradeoffPoint> boundary_curve_serial(const ProblemInstance& instance, Metric metric, int n_points,
                                                 RmsMethod rms_method = RmsMethod::Analytic);

// Matches the TradeoffPoint tolerance; absorbs 9-decimal rounding of d1 on steep stretches.
inline constexpr double kRegionTol = 1e-7;

// d2 minus the boundary value at d1; +infinity at or beyond saturation.
double region_margin(const ProblemInstance& instance, double d1, double d2, Metric metric);

// Whether an unbiased jointly measurable pair with d(P, A) = d1 and d(Q, B) <= d2
// exists. Negative inputs are outside.
bool region_membership(const ProblemInstance& instance, double d1, double d2, Metric metric);

struct ApproximationPair {
  BlochVector a{};
  BlochVector b{};
};

// A jointly measurable pair realizing a point of the region, or nullopt outside.
std::optional<ApproximationPair> region_witness(const ProblemInstance& instance, double d1, double d2,
                                                Metric metric);

}  // namespace jmspin

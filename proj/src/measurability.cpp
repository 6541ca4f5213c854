#include "jmspin/measurability.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <random>

#include "jmspin/nelder_mead.hpp"

namespace jmspin {
namespace {

struct CornerTerms {
  std::array<double, 4> value;  // twice the min eigenvalue of G++, G+-, G-+, G--
};

// Each term is offset_i + sign_i * gamma - |g - center_i|.
struct CornerGeometry {
  std::array<double, 4> offset;
  std::array<double, 4> sign;
  std::array<BlochVector, 4> center;

  CornerGeometry(const BinaryObservable& a, const BinaryObservable& b)
      : offset{0.0, a.alpha(), b.alpha(), 2.0 - a.alpha() - b.alpha()},
        sign{1.0, -1.0, -1.0, 1.0},
        center{BlochVector{}, a.vec(), b.vec(), a.vec() + b.vec()} {}

  double term(int i, double gamma, const BlochVector& g) const {
    return offset[i] + sign[i] * gamma - distance(g, center[i]);
  }

  double objective(double gamma, const BlochVector& g) const {
    double m = term(0, gamma, g);
    for (int i = 1; i < 4; ++i) m = std::min(m, term(i, gamma, g));
    return m;
  }

  // For fixed g the objective is the min of two rising and two falling lines in
  // gamma; this is where they cross.
  double best_gamma(const BlochVector& g) const {
    const double rising = std::min(offset[0] - distance(g, center[0]), offset[3] - distance(g, center[3]));
    const double falling = std::min(offset[1] - distance(g, center[1]), offset[2] - distance(g, center[2]));
    return 0.5 * (falling - rising);
  }
};

using Vec4 = opt::Point<4>;

Vec4 pack(double gamma, const BlochVector& g) { return {gamma, g.x, g.y, g.z}; }
BlochVector vec_of(const Vec4& v) { return {v[1], v[2], v[3]}; }

struct StartOutcome {
  Vec4 x{};
  double value = 0.0;
  bool converged = false;
};

StartOutcome ascend_from(const CornerGeometry& geo, Vec4 x) {
  auto neg = [&](const Vec4& v) { return -geo.objective(v[0], vec_of(v)); };
  opt::SimplexCriteria criteria;
  StartOutcome out;
  out.x = x;
  out.value = -neg(x);
  // Restart from the incumbent with a smaller simplex until the value stalls;
  // a single run can collapse onto a kink of the max-min surface.
  double step = 0.25;
  for (int restart = 0; restart < 6; ++restart) {
    criteria.initial_step = step;
    const auto r = opt::nelder_mead<4>(neg, out.x, criteria);
    const bool improved = -r.value > out.value + 1e-15;
    if (-r.value >= out.value) {
      out.x = r.argmin;
      out.value = -r.value;
    }
    out.converged = r.converged;
    if (!improved && restart > 0) break;
    step *= 0.1;
  }
  // Exact gamma for the final g never lowers the objective.
  const BlochVector g = vec_of(out.x);
  const double gamma = geo.best_gamma(g);
  const double polished = geo.objective(gamma, g);
  if (polished >= out.value) {
    out.x[0] = gamma;
    out.value = polished;
  }
  return out;
}

}  // namespace

double JointPovm4::min_eigenvalue() const {
  return std::min({g_pp.min_eigenvalue(), g_pm.min_eigenvalue(), g_mp.min_eigenvalue(), g_mm.min_eigenvalue()});
}

JointPovmCheck verify_joint_povm(const JointPovm4& povm, const BinaryObservable& a, const BinaryObservable& b) {
  auto op_err = [](const HermitianOp& x, const HermitianOp& y) {
    // Operator norm of x - y is 1/2 (|d0| + |d|).
    const HermitianOp d = x - y;
    return 0.5 * (std::abs(d.scalar) + d.vec.norm());
  };
  JointPovmCheck c;
  c.min_eigenvalue = povm.min_eigenvalue();
  c.normalization_error = op_err(povm.sum(), HermitianOp::identity());
  c.first_marginal_error = op_err(povm.first_marginal(), a.effect());
  c.second_marginal_error = op_err(povm.second_marginal(), b.effect());
  return c;
}

JointPovm4 joint_povm_from_corner(const BinaryObservable& a, const BinaryObservable& b, double gamma,
                                  const BlochVector& g) {
  const HermitianOp gpp{gamma, g};
  return {gpp, a.effect() - gpp, b.effect() - gpp, HermitianOp::identity() - a.effect() - b.effect() + gpp};
}

double busch_margin(const BlochVector& a, const BlochVector& b) { return 2.0 - distance(a, b) - (a + b).norm(); }

bool jm_ellipsoid_contains(const BlochVector& a, const BlochVector& b) { return busch_margin(a, b) >= -kExactTol; }

double corner_objective(const BinaryObservable& a, const BinaryObservable& b, double gamma, const BlochVector& g) {
  return CornerGeometry(a, b).objective(gamma, g);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  // splitmix64 finalizer over the combined key
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

FeasibilityResult joint_feasibility(const BinaryObservable& a, const BinaryObservable& b, double tol,
                                    std::uint64_t seed) {
  const CornerGeometry geo(a, b);

  // Fixed start order: origin, a/2, b/2, (a+b)/4, then four seeded random points.
  std::array<BlochVector, 8> starts{BlochVector{}, a.vec() * 0.5, b.vec() * 0.5, (a.vec() + b.vec()) * 0.25};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (std::size_t i = 4; i < starts.size(); ++i) starts[i] = {unit(rng), unit(rng), unit(rng)};

  bool any_converged = false;
  StartOutcome best;
  bool have_best = false;
  for (const BlochVector& g0 : starts) {
    const StartOutcome r = ascend_from(geo, pack(geo.best_gamma(g0), g0));
    any_converged = any_converged || r.converged;
    if (!have_best || r.value > best.value) {
      best = r;
      have_best = true;
    }
  }
  if (!any_converged) throw Error(ErrorKind::SolverDidNotConverge, "no simplex start reached the diameter tolerance");

  FeasibilityResult res;
  res.slack = 0.5 * best.value;
  res.feasible = res.slack >= -tol;
  res.gamma = best.x[0];
  res.g = vec_of(best.x);
  if (res.feasible) res.witness = joint_povm_from_corner(a, b, res.gamma, res.g);
  return res;
}

JointPovm4 construct_joint_povm(const BinaryObservable& a, const BinaryObservable& b, double tol,
                                std::uint64_t seed) {
  const FeasibilityResult fr = joint_feasibility(a, b, tol, seed);
  if (!fr.feasible)
    throw Error(ErrorKind::NotJointlyMeasurable, "max min-eigenvalue " + std::to_string(fr.slack) + " < -tol");

  const CornerGeometry geo(a, b);
  double gamma = fr.gamma;
  BlochVector g = fr.g;
  double current = geo.objective(gamma, g);
  // Push slightly negative effects back to zero along the violated term's normal.
  for (int iter = 0; iter < 32 && current < 0.0; ++iter) {
    int worst = 0;
    for (int i = 1; i < 4; ++i)
      if (geo.term(i, gamma, g) < geo.term(worst, gamma, g)) worst = i;
    const double deficit = -geo.term(worst, gamma, g);
    const BlochVector off = g - geo.center[worst];
    const double r = off.norm();
    const BlochVector dir_g = r > 0.0 ? off / r * -1.0 : BlochVector{};
    const double grad2 = 1.0 + (r > 0.0 ? 1.0 : 0.0);
    const double step = deficit / grad2;
    const double gamma_new = gamma + step * geo.sign[worst];
    const BlochVector g_new = g + dir_g * step;
    const double next = geo.objective(gamma_new, g_new);
    if (next <= current) break;
    gamma = gamma_new;
    g = g_new;
    current = next;
  }
  JointPovm4 povm = joint_povm_from_corner(a, b, gamma, g);
  if (povm.min_eigenvalue() < -1e-10)
    throw Error(ErrorKind::NotJointlyMeasurable,
                "oracle slack " + std::to_string(fr.slack) + " too negative for a positive witness");
  return povm;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::JointlyMeasurable: return "jointly-measurable";
    case Verdict::NotJointlyMeasurable: return "not-jointly-measurable";
    case Verdict::BoundaryIndeterminate: return "boundary-indeterminate";
  }
  return "unknown";
}

Classification classify(const BinaryObservable& a, const BinaryObservable& b, double tol, std::uint64_t seed) {
  Classification c;
  c.busch_margin = busch_margin(a.vec(), b.vec());
  c.feasibility = joint_feasibility(a, b, tol, seed);
  if (a.is_unbiased() && b.is_unbiased()) {
    c.verdict = c.busch_margin >= -kExactTol ? Verdict::JointlyMeasurable : Verdict::NotJointlyMeasurable;
  } else if (c.busch_margin < -tol) {
    c.verdict = Verdict::NotJointlyMeasurable;
  } else if (std::abs(c.feasibility.slack) < kIndeterminateBand) {
    c.verdict = Verdict::BoundaryIndeterminate;
  } else {
    c.verdict = c.feasibility.slack > 0.0 ? Verdict::JointlyMeasurable : Verdict::NotJointlyMeasurable;
  }
  return c;
}

std::vector<FeasibilityResult> joint_feasibility_batch_serial(std::span<const ObservablePair> pairs, double tol,
                                                              std::uint64_t seed) {
  std::vector<FeasibilityResult> out;
  out.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out.push_back(joint_feasibility(pairs[i].a, pairs[i].b, tol, derive_seed(seed, i)));
  return out;
}

std::vector<FeasibilityResult> joint_feasibility_batch(std::span<const ObservablePair> pairs, double tol,
                                                       std::uint64_t seed) {
  std::vector<FeasibilityResult> out(pairs.size());
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = joint_feasibility(pairs[i].a, pairs[i].b, tol, derive_seed(seed, static_cast<std::uint64_t>(i)));
    } catch (...) {
#pragma omp critical(jmspin_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace jmspin

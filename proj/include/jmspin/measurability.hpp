#pragma once

// Joint measurability of two binary qubit observables.
//
// A joint POVM for A = 1/2(alpha, a) and B = 1/2(beta, b) is fixed by its
// G++ = 1/2(gamma, g); the rest follow from the marginal constraints:
//   G+- = A - G++,  G-+ = B - G++,  G-- = I - A - B + G++.
// The pair is jointly measurable iff some (gamma, g) makes all four positive.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jmspin/algebra.hpp"

namespace jmspin {

inline constexpr double kFeasibilityTol = 1e-9;
// |slack| below this is reported as boundary-indeterminate for biased pairs.
inline constexpr double kIndeterminateBand = 1e-6;

struct JointPovm4 {
  HermitianOp g_pp, g_pm, g_mp, g_mm;

  HermitianOp sum() const { return g_pp + g_pm + g_mp + g_mm; }
  HermitianOp first_marginal() const { return g_pp + g_pm; }
  HermitianOp second_marginal() const { return g_pp + g_mp; }
  double min_eigenvalue() const;
};

// Residuals of a candidate joint POVM against its intended marginals.
struct JointPovmCheck {
  double min_eigenvalue = 0.0;
  double normalization_error = 0.0;
  double first_marginal_error = 0.0;
  double second_marginal_error = 0.0;

  bool passes(double positivity_tol = 1e-10, double normalization_tol = 1e-12, double marginal_tol = 1e-10) const {
    return min_eigenvalue >= -positivity_tol && normalization_error <= normalization_tol &&
           first_marginal_error <= marginal_tol && second_marginal_error <= marginal_tol;
  }
};

JointPovmCheck verify_joint_povm(const JointPovm4& povm, const BinaryObservable& a, const BinaryObservable& b);

// The joint POVM generated by G++ = 1/2 (gamma I + g . sigma).
JointPovm4 joint_povm_from_corner(const BinaryObservable& a, const BinaryObservable& b, double gamma,
                                  const BlochVector& g);

struct FeasibilityResult {
  bool feasible = false;
  // Largest achievable min-eigenvalue over the four effects.
  double slack = 0.0;
  double gamma = 0.0;
  BlochVector g{};
  std::optional<JointPovm4> witness;
};

// 2 - |a - b| - |a + b|; for alpha = beta = 1 the pair is jointly measurable iff >= 0.
double busch_margin(const BlochVector& a, const BlochVector& b);

// b lies in the ellipsoid with foci +-a and major semi-axis 1 (within 1e-12).
bool jm_ellipsoid_contains(const BlochVector& a, const BlochVector& b);

// Twice the smallest eigenvalue of the four effects generated by (gamma, g).
double corner_objective(const BinaryObservable& a, const BinaryObservable& b, double gamma, const BlochVector& g);

// Maximizes corner_objective by multi-start simplex search; feasible iff slack >= -tol.
// Throws SolverDidNotConverge if no start reaches the simplex tolerance.
FeasibilityResult joint_feasibility(const BinaryObservable& a, const BinaryObservable& b,
                                    double tol = kFeasibilityTol, std::uint64_t seed = 42);

// Witness with every effect genuinely positive semidefinite (min eigenvalue >= -1e-10).
// Throws NotJointlyMeasurable when the pair is infeasible.
JointPovm4 construct_joint_povm(const BinaryObservable& a, const BinaryObservable& b,
                                double tol = kFeasibilityTol, std::uint64_t seed = 42);

enum class Verdict { JointlyMeasurable, NotJointlyMeasurable, BoundaryIndeterminate };
const char* to_string(Verdict v) noexcept;

struct Classification {
  Verdict verdict = Verdict::BoundaryIndeterminate;
  double busch_margin = 0.0;
  FeasibilityResult feasibility;
};

// Unbiased pairs are decided by the Busch margin. Biased pairs failing the Busch
// margin by more than tol are rejected; otherwise the oracle slack decides, and
// |slack| < kIndeterminateBand is reported as indeterminate.
Classification classify(const BinaryObservable& a, const BinaryObservable& b, double tol = kFeasibilityTol,
                        std::uint64_t seed = 42);

struct ObservablePair {
  BinaryObservable a;
  BinaryObservable b;
};

// Batch oracle. Pair i uses a seed derived from (seed, i), so both versions
// return identical results regardless of thread count.
std::vector<FeasibilityResult> joint_feasibility_batch(std::span<const ObservablePair> pairs,
                                                       double tol = kFeasibilityTol, std::uint64_t seed = 42);
std::vector<FeasibilityResult> joint_feasibility_batch_serial(std::span<const ObservablePair> pairs,
                                                              double tol = kFeasibilityTol, std::uint64_t seed = 42);

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace jmspin

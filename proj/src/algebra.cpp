#include "jmspin/algebra.hpp"

#include <string>

namespace jmspin {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OutOfEffectCone: return "OutOfEffectCone";
    case ErrorKind::NotUnitVector: return "NotUnitVector";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::BiasedObservable: return "BiasedObservable";
    case ErrorKind::NotJointlyMeasurable: return "NotJointlyMeasurable";
    case ErrorKind::DistanceOutOfRange: return "DistanceOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SolverDidNotConverge: return "SolverDidNotConverge";
    case ErrorKind::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

BlochVector normalized(const BlochVector& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw Error(ErrorKind::NotUnitVector, "cannot normalize a zero or non-finite vector");
  return v / n;
}

Matrix2c HermitianOp::to_matrix() const {
  using C = std::complex<double>;
  return {C(0.5 * (scalar + vec.z), 0.0), C(0.5 * vec.x, -0.5 * vec.y),
          C(0.5 * vec.x, 0.5 * vec.y), C(0.5 * (scalar - vec.z), 0.0)};
}

double min_eigenvalue(const HermitianOp& m) { return m.min_eigenvalue(); }

BinaryObservable effect_from_parameters(double alpha, const BlochVector& a) {
  if (!std::isfinite(alpha) || !a.is_finite())
    throw Error(ErrorKind::OutOfEffectCone, "non-finite effect parameters");
  const double n = a.norm();
  if (alpha < n - kExactTol || alpha > 2.0 - n + kExactTol)
    throw Error(ErrorKind::OutOfEffectCone,
                "alpha=" + std::to_string(alpha) + " outside [|a|, 2-|a|] with |a|=" + std::to_string(n));
  return BinaryObservable(alpha, a);
}

BinaryObservable sharp_spin(const BlochVector& direction) {
  if (!direction.is_finite() || std::abs(direction.norm() - 1.0) > kInputTol)
    throw Error(ErrorKind::NotUnitVector, "direction norm " + std::to_string(direction.norm()));
  return BinaryObservable(1.0, direction / direction.norm());
}

BinaryObservable trivial_observable() { return effect_from_parameters(1.0, {}); }

double outcome_probability(const BinaryObservable& obs, const BlochVector& state_r) {
  if (!state_r.is_finite() || state_r.norm() > 1.0 + kExactTol)
    throw Error(ErrorKind::InvalidState, "state vector norm " + std::to_string(state_r.norm()) + " > 1");
  return obs.effect().expectation(state_r);
}

ProblemInstance::ProblemInstance(double theta_rad) : theta_(theta_rad) {
  if (!(theta_rad > 0.0) || theta_rad > 0.5 * kPi + kExactTol)
    throw Error(ErrorKind::InvalidArgument, "theta must satisfy 0 < theta <= 90 degrees");
  p_ = {1.0, 0.0, 0.0};
  if (std::abs(theta_rad - 0.5 * kPi) <= 4e-16) {
    theta_ = 0.5 * kPi;
    q_ = {0.0, 1.0, 0.0};  // cos(pi/2) would leave a 6e-17 residue
  } else {
    q_ = {std::cos(theta_rad), std::sin(theta_rad), 0.0};
  }
}

ProblemInstance ProblemInstance::from_degrees(double theta_deg) { return ProblemInstance(deg_to_rad(theta_deg)); }

}  // namespace jmspin

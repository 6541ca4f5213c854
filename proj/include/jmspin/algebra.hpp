#pragma once

// Qubit operators, effects and states in Pauli coordinates.
//
// Every operator here is a 2x2 Hermitian matrix written as
//   M = 1/2 (m0 I + m . sigma),
// so eigenvalues are 1/2 (m0 +- |m|) and the trace is m0. Nothing in the
// library diagonalizes a matrix numerically.

#include <array>
#include <cmath>
#include <complex>

#include "jmspin/errors.hpp"

namespace jmspin {

// Tolerance for internal cone and unit-norm checks.
inline constexpr double kExactTol = 1e-12;
// Tolerance for user-supplied direction vectors.
inline constexpr double kInputTol = 1e-9;

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr BlochVector operator-(const BlochVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr BlochVector operator-() const { return {-x, -y, -z}; }
  constexpr BlochVector operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr BlochVector operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr bool operator==(const BlochVector&) const = default;

  double norm() const { return std::hypot(x, y, z); }
  constexpr double norm2() const { return x * x + y * y + z * z; }
  bool is_finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

constexpr BlochVector operator*(double s, const BlochVector& v) { return v * s; }
constexpr double dot(const BlochVector& a, const BlochVector& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr BlochVector cross(const BlochVector& a, const BlochVector& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double distance(const BlochVector& a, const BlochVector& b) { return (a - b).norm(); }

// Unit vector along v; throws NotUnitVector for the zero vector.
BlochVector normalized(const BlochVector& v);

using Matrix2c = std::array<std::complex<double>, 4>;  // row-major

// M = 1/2 (scalar I + vec . sigma).
struct HermitianOp {
  double scalar = 0.0;
  BlochVector vec{};

  static constexpr HermitianOp identity() { return {2.0, {}}; }
  static constexpr HermitianOp zero() { return {0.0, {}}; }

  constexpr HermitianOp operator+(const HermitianOp& o) const { return {scalar + o.scalar, vec + o.vec}; }
  constexpr HermitianOp operator-(const HermitianOp& o) const { return {scalar - o.scalar, vec - o.vec}; }
  constexpr HermitianOp operator*(double s) const { return {scalar * s, vec * s}; }

  constexpr double trace() const { return scalar; }
  double min_eigenvalue() const { return 0.5 * (scalar - vec.norm()); }
  double max_eigenvalue() const { return 0.5 * (scalar + vec.norm()); }

  // tr(M rho) for rho = 1/2 (I + r . sigma).
  constexpr double expectation(const BlochVector& r) const { return 0.5 * (scalar + dot(vec, r)); }

  // Dense form, for debugging and independent checks only.
  Matrix2c to_matrix() const;
};

double min_eigenvalue(const HermitianOp& m);

// Two-outcome POVM {A, I - A} with A = 1/2 (alpha I + a . sigma).
class BinaryObservable {
 public:
  double alpha() const { return alpha_; }
  const BlochVector& vec() const { return vec_; }

  HermitianOp effect() const { return {alpha_, vec_}; }
  HermitianOp complement_effect() const { return {2.0 - alpha_, -vec_}; }
  BinaryObservable complement() const { return BinaryObservable(2.0 - alpha_, -vec_); }

  bool is_unbiased(double tol = kExactTol) const { return std::abs(alpha_ - 1.0) <= tol; }
  bool is_sharp() const { return is_unbiased() && std::abs(vec_.norm() - 1.0) <= kExactTol; }

 private:
  friend BinaryObservable effect_from_parameters(double alpha, const BlochVector& a);
  friend BinaryObservable sharp_spin(const BlochVector& direction);
  BinaryObservable(double alpha, const BlochVector& a) : alpha_(alpha), vec_(a) {}

  double alpha_;
  BlochVector vec_;
};

// Validates |a| <= alpha <= 2 - |a| (i.e. 0 <= A <= I). Throws OutOfEffectCone.
BinaryObservable effect_from_parameters(double alpha, const BlochVector& a);

// P = 1/2 (I + p . sigma). Throws NotUnitVector unless |p| = 1 within kInputTol.
// The stored direction is renormalized.
BinaryObservable sharp_spin(const BlochVector& direction);

// The trivial observable A = I/2.
BinaryObservable trivial_observable();

// tr(rho A). Throws InvalidState if |r| > 1.
double outcome_probability(const BinaryObservable& obs, const BlochVector& state_r);

// Two unit directions p, q in the xy-plane separated by theta:
// p = e_x, q = (cos theta, sin theta, 0).
class ProblemInstance {
 public:
  // Throws InvalidArgument unless 0 < theta <= pi/2.
  explicit ProblemInstance(double theta_rad);
  static ProblemInstance from_degrees(double theta_deg);

  double theta() const { return theta_; }
  const BlochVector& p() const { return p_; }
  const BlochVector& q() const { return q_; }
  // Unit vector in the p-q plane orthogonal to p, on the side of q.
  BlochVector p_perp() const { return {0.0, 1.0, 0.0}; }

  BinaryObservable sharp_p() const { return sharp_spin(p_); }
  BinaryObservable sharp_q() const { return sharp_spin(q_); }

 private:
  double theta_;
  BlochVector p_;
  BlochVector q_;
};

inline constexpr double kPi = 3.14159265358979323846;
constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace jmspin

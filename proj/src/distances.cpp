#include "jmspin/distances.hpp"

#include <string>

namespace jmspin {
namespace {

void require_sharp(const BinaryObservable& p) {
  if (!p.is_sharp()) throw Error(ErrorKind::NotUnitVector, "reference observable must be sharp");
}

void require_unbiased(const BinaryObservable& a) {
  if (!a.is_unbiased(kInputTol))
    throw Error(ErrorKind::BiasedObservable, "alpha=" + std::to_string(a.alpha()) + " but 1 is required");
}

}  // namespace

double worst_case_deviation(const BinaryObservable& sharp_p, const BinaryObservable& a) {
  require_sharp(sharp_p);
  return 0.5 * distance(sharp_p.vec(), a.vec()) + 0.5 * std::abs(1.0 - a.alpha());
}

double average_deviation(const BinaryObservable& sharp_p, const BinaryObservable& a) {
  require_sharp(sharp_p);
  const double d = distance(sharp_p.vec(), a.vec());
  const double c = std::abs(1.0 - a.alpha());
  if (d <= c) return 0.5 * c;
  return 0.25 * d + c * c / (4.0 * d);
}

double statistical_distance(const BinaryObservable& sharp_p, const BinaryObservable& a) {
  require_sharp(sharp_p);
  require_unbiased(a);
  return 0.5 * distance(sharp_p.vec(), a.vec());
}

double rms_noise(const BinaryObservable& sharp_p, const BinaryObservable& a, const BlochVector& state_r) {
  require_sharp(sharp_p);
  if (!state_r.is_finite() || state_r.norm() > 1.0 + kExactTol)
    throw Error(ErrorKind::InvalidState, "state vector norm " + std::to_string(state_r.norm()) + " > 1");
  const BlochVector& p = sharp_p.vec();
  const double radicand =
      1.0 - a.vec().norm2() + (p - a.vec()).norm2() + 2.0 * (1.0 - a.alpha()) * dot(p, state_r);
  if (radicand < -kExactTol) throw Error(ErrorKind::NegativeRadicand, "rms radicand " + std::to_string(radicand));
  return std::sqrt(std::max(radicand, 0.0));
}

double rms_distance(const BinaryObservable& sharp_p, const BinaryObservable& a) {
  require_sharp(sharp_p);
  const BlochVector& p = sharp_p.vec();
  if (a.alpha() == 1.0) return std::sqrt(std::max(2.0 * (1.0 - dot(a.vec(), p)), 0.0));
  const double radicand = 1.0 - a.vec().norm2() + (p - a.vec()).norm2() + 2.0 * std::abs(1.0 - a.alpha());
  return std::sqrt(std::max(radicand, 0.0));
}

RmsDecomposition rms_decomposition(const BinaryObservable& sharp_p, const BinaryObservable& a) {
  require_sharp(sharp_p);
  require_unbiased(a);
  return {(sharp_p.vec() - a.vec()).norm2(), 1.0 - a.vec().norm2()};
}

DeviationReport deviation_report(const BinaryObservable& sharp_p, const BinaryObservable& a) {
  DeviationReport r;
  r.worst = worst_case_deviation(sharp_p, a);
  r.average = average_deviation(sharp_p, a);
  if (a.is_unbiased(kInputTol)) r.statistical = statistical_distance(sharp_p, a);
  return r;
}

RmsReport rms_report(const BinaryObservable& sharp_p, const BinaryObservable& a, const BlochVector& state_r) {
  return {rms_noise(sharp_p, a, state_r), rms_distance(sharp_p, a)};
}

}  // namespace jmspin

#pragma once

// Approximation quality of a binary observable A against a sharp spin P.

#include <optional>

#include "jmspin/algebra.hpp"

namespace jmspin {

// sup over states of |tr(rho P) - tr(rho A)| = 1/2 |p - a| + 1/2 |1 - alpha|.
double worst_case_deviation(const BinaryObservable& sharp_p, const BinaryObservable& a);

// Average of |<P> - <A>| over pure states, uniform on the sphere.
// With d = |p - a| and c = |1 - alpha|:
//   d >= c: d/4 + c^2/(4d)
//   d <= c: c/2
double average_deviation(const BinaryObservable& sharp_p, const BinaryObservable& a);

// d_s(P, A) = 1/2 |p - a|. Throws BiasedObservable unless alpha = 1 within 1e-9.
double statistical_distance(const BinaryObservable& sharp_p, const BinaryObservable& a);

// Root-mean-square noise at state r:
//   sqrt(1 - |a|^2 + |p - a|^2 + 2 (1 - alpha) p.r)
// Throws InvalidState for |r| > 1 and NegativeRadicand if the radicand is below -1e-12.
double rms_noise(const BinaryObservable& sharp_p, const BinaryObservable& a, const BlochVector& state_r);

// Worst rms noise over states; equals sqrt(2 (1 - a.p)) when alpha = 1.
double rms_distance(const BinaryObservable& sharp_p, const BinaryObservable& a);

struct RmsDecomposition {
  double accuracy_part = 0.0;     // |p - a|^2
  double unsharpness_part = 0.0;  // 1 - |a|^2
};

// Splits d_rms^2 for unbiased A. Throws BiasedObservable.
RmsDecomposition rms_decomposition(const BinaryObservable& sharp_p, const BinaryObservable& a);

struct DeviationReport {
  double worst = 0.0;
  double average = 0.0;
  std::optional<double> statistical;  // present when alpha = 1
};

struct RmsReport {
  double per_state = 0.0;
  double distance = 0.0;
};

DeviationReport deviation_report(const BinaryObservable& sharp_p, const BinaryObservable& a);
RmsReport rms_report(const BinaryObservable& sharp_p, const BinaryObservable& a, const BlochVector& state_r);

}  // namespace jmspin

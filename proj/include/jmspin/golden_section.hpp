#pragma once

#include <cmath>

namespace jmspin::opt {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
};

// Golden-section minimization of a unimodal f on [lo, hi], stopping once the
// bracket is narrower than tol. The returned value is the best evaluated point,
// including both endpoints.
template <class F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi, double tol, int max_iterations = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iterations && (b - a) > tol; ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  ScalarMinimum best{fc <= fd ? c : d, fc <= fd ? fc : fd};
  const double fm = f(0.5 * (a + b));
  if (fm < best.value) best = {0.5 * (a + b), fm};
  const double flo = f(lo), fhi = f(hi);
  if (flo < best.value) best = {lo, flo};
  if (fhi < best.value) best = {hi, fhi};
  return best;
}

}  // namespace jmspin::opt

#pragma once

// Derivative-free simplex minimizer (Nelder-Mead) for small fixed dimension.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace jmspin::opt {

template <std::size_t N>
using Point = std::array<double, N>;

struct SimplexCriteria {
  int max_iterations = 2000;
  double diameter_tol = 1e-11;  // stop when every vertex is this close to the best one
  double initial_step = 0.1;
};

template <std::size_t N>
struct SimplexResult {
  Point<N> argmin{};
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Minimizes f starting from an axis-aligned simplex around x0.
template <std::size_t N, class F>
SimplexResult<N> nelder_mead(F&& f, const Point<N>& x0, const SimplexCriteria& criteria = {}) {
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;

  std::array<Point<N>, N + 1> x;
  std::array<double, N + 1> fx;
  x[0] = x0;
  for (std::size_t i = 0; i < N; ++i) {
    x[i + 1] = x0;
    x[i + 1][i] += criteria.initial_step;
  }
  for (std::size_t i = 0; i <= N; ++i) fx[i] = f(x[i]);

  std::array<std::size_t, N + 1> order;
  auto sort_vertices = [&] {
    for (std::size_t i = 0; i <= N; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    std::array<Point<N>, N + 1> xs;
    std::array<double, N + 1> fs;
    for (std::size_t i = 0; i <= N; ++i) {
      xs[i] = x[order[i]];
      fs[i] = fx[order[i]];
    }
    x = xs;
    fx = fs;
  };
  auto diameter = [&] {
    double d = 0.0;
    for (std::size_t i = 1; i <= N; ++i)
      for (std::size_t k = 0; k < N; ++k) d = std::max(d, std::abs(x[i][k] - x[0][k]));
    return d;
  };
  auto affine = [](const Point<N>& c, const Point<N>& w, double t) {
    Point<N> r;
    for (std::size_t k = 0; k < N; ++k) r[k] = c[k] + t * (w[k] - c[k]);
    return r;
  };

  SimplexResult<N> out;
  sort_vertices();
  int it = 0;
  for (; it < criteria.max_iterations; ++it) {
    if (diameter() < criteria.diameter_tol) {
      out.converged = true;
      break;
    }
    Point<N> centroid{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) centroid[k] += x[i][k] / static_cast<double>(N);

    const Point<N> xr = affine(centroid, x[N], -kReflect);
    const double fr = f(xr);
    if (fr < fx[0]) {
      const Point<N> xe = affine(centroid, x[N], -kExpand);
      const double fe = f(xe);
      if (fe < fr) {
        x[N] = xe;
        fx[N] = fe;
      } else {
        x[N] = xr;
        fx[N] = fr;
      }
    } else if (fr < fx[N - 1]) {
      x[N] = xr;
      fx[N] = fr;
    } else {
      const bool outside = fr < fx[N];
      const Point<N> xc = outside ? affine(centroid, xr, kContract) : affine(centroid, x[N], kContract);
      const double fc = f(xc);
      if (fc < (outside ? fr : fx[N])) {
        x[N] = xc;
        fx[N] = fc;
      } else {
        for (std::size_t i = 1; i <= N; ++i) {
          x[i] = affine(x[0], x[i], kShrink);
          fx[i] = f(x[i]);
        }
      }
    }
    sort_vertices();
  }
  if (!out.converged && diameter() < criteria.diameter_tol) out.converged = true;
  out.argmin = x[0];
  out.value = fx[0];
  out.iterations = it;
  return out;
}

}  // namespace jmspin::opt

#pragma once

// Geometry of the compatibility region of an unbiased effect vector a:
//   E(a) = { b : |b - a| + |b + a| <= 2 },
// an ellipsoid of revolution about a with semi-axes 1 and sqrt(1 - |a|^2).
// For |a| = 1 it collapses to the segment [-a, a]; for a = 0 it is the unit ball.

#include "jmspin/algebra.hpp"

namespace jmspin {

struct EllipsoidProjection {
  double distance = 0.0;
  BlochVector closest{};
};

// Euclidean projection of `point` onto E(a). Requires |a| <= 1.
EllipsoidProjection project_onto_busch_ellipsoid(const BlochVector& a, const BlochVector& point);

// max over b in E(a) of b . direction.
double busch_ellipsoid_support(const BlochVector& a, const BlochVector& direction);

// Closest point of an axis-aligned ellipse x^2/major^2 + y^2/minor^2 = 1 to (x, y),
// for x, y >= 0 outside the ellipse. Bisection on the Lagrange multiplier.
struct EllipsePoint {
  double x = 0.0;
  double y = 0.0;
};
EllipsePoint closest_on_ellipse(double major, double minor, double x, double y);

}  // namespace jmspin

#include "jmspin/ellipsoid.hpp"

#include <algorithm>
#include <cmath>

namespace jmspin {
namespace {

struct AxisFrame {
  double c = 0.0;            // |a|
  BlochVector axis{};        // a / |a|
  double along = 0.0;        // point . axis
  double across = 0.0;       // distance of point from the axis line (>= 0)
  BlochVector across_dir{};  // unit direction of the off-axis component
};

AxisFrame frame_of(const BlochVector& a, const BlochVector& point) {
  AxisFrame f;
  f.c = std::min(a.norm(), 1.0);
  f.axis = a / a.norm();
  f.along = dot(point, f.axis);
  const BlochVector perp = point - f.axis * f.along;
  f.across = perp.norm();
  if (f.across > 0.0) f.across_dir = perp / f.across;
  return f;
}

double minor_axis(double c) { return std::sqrt(std::max((1.0 - c) * (1.0 + c), 0.0)); }

}  // namespace

EllipsePoint closest_on_ellipse(double major, double minor, double x, double y) {
  const double a2 = major * major, b2 = minor * minor;
  auto excess = [&](double t) {
    const double u = major * x / (a2 + t), v = minor * y / (b2 + t);
    return u * u + v * v - 1.0;
  };
  double lo = 0.0, hi = major * x + minor * y;
  // excess is decreasing in t; excess(0) > 0 outside, excess(hi) <= 0.
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double t = 0.5 * (lo + hi);
  return {a2 * x / (a2 + t), b2 * y / (b2 + t)};
}

EllipsoidProjection project_onto_busch_ellipsoid(const BlochVector& a, const BlochVector& point) {
  const double c = a.norm();
  if (c == 0.0) {
    const double r = point.norm();
    if (r <= 1.0) return {0.0, point};
    return {r - 1.0, point / r};
  }
  const AxisFrame f = frame_of(a, point);
  const double minor = minor_axis(f.c);
  if (minor == 0.0) {
    const double s = std::clamp(f.along, -1.0, 1.0);
    const BlochVector closest = f.axis * s;
    return {distance(point, closest), closest};
  }
  const double level = f.along * f.along + (f.across / minor) * (f.across / minor);
  if (level <= 1.0) return {0.0, point};

  const EllipsePoint e = closest_on_ellipse(1.0, minor, std::abs(f.along), f.across);
  const BlochVector closest = f.axis * std::copysign(e.x, f.along) + f.across_dir * e.y;
  return {std::hypot(std::abs(f.along) - e.x, f.across - e.y), closest};
}

double busch_ellipsoid_support(const BlochVector& a, const BlochVector& direction) {
  const double c = a.norm();
  if (c == 0.0) return direction.norm();
  const AxisFrame f = frame_of(a, direction);
  return std::hypot(f.along, minor_axis(f.c) * f.across);
}

}  // namespace jmspin

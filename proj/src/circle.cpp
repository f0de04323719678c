#include "lozenge/circle.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace lozenge {

CirclePoint CirclePoint::from_real(double x) {
  if (std::isinf(x)) return infinity();
  return CirclePoint(0.5 + std::atan(x) / std::numbers::pi);
}

CirclePoint CirclePoint::from_vector(double p, double q) {
  // (x, 1) has polar angle atan2(1, x) = pi/2 - atan(x), hence t = -angle/pi mod 1.
  return CirclePoint(-std::atan2(q, p) / std::numbers::pi);
}

double CirclePoint::to_real() const {
  if (angle_ == 0.0) return std::numeric_limits<double>::infinity();
  return std::tan(std::numbers::pi * (angle_ - 0.5));
}

double circle_distance(CirclePoint a, CirclePoint b) {
  double d = frac(a.angle() - b.angle());
  return std::min(d, 1.0 - d);
}

bool in_open_arc(CirclePoint x, CirclePoint from, CirclePoint to) {
  double span = frac(to.angle() - from.angle());
  double pos = frac(x.angle() - from.angle());
  return pos > 0.0 && pos < span;
}

}  // namespace lozenge

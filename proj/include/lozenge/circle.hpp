#pragma once

#include "lozenge/numeric.hpp"

namespace lozenge {

// A point of the universal circle R/Z. The boundary of the upper half-plane is
// charted by the Cayley transform x -> (x-i)/(x+i), scaled to angle/2pi, which
// is t = 1/2 + atan(x)/pi on the real line and 0 at infinity.
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(double angle) : angle_(frac(angle)) {}

  static CirclePoint from_real(double x);
  static CirclePoint infinity() { return CirclePoint(0.0); }
  // Projective class of the vector (p, q), i.e. the boundary point p/q.
  static CirclePoint from_vector(double p, double q);

  double angle() const { return angle_; }
  // Inverse chart; returns +inf for the point at infinity.
  double to_real() const;

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

 private:
  double angle_ = 0.0;
};

// Shortest distance on R/Z, in [0, 1/2].
double circle_distance(CirclePoint a, CirclePoint b);

// True iff x lies in the open arc that runs in the positive direction from
// `from` to `to`.
bool in_open_arc(CirclePoint x, CirclePoint from, CirclePoint to);

}  // namespace lozenge

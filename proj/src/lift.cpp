#include "lozenge/lift.hpp"

#include <cmath>
#include <numbers>

namespace lozenge {

namespace {

// Continuous lift of the boundary action, built from the Iwasawa factorization
// M = K(theta) * [[r, s], [0, 1/r]]. The triangular factor preserves each
// half-plane of vectors, so its angle lift stays inside the current pi-band;
// the rotation adds theta.
double raw_lift(const MobiusElement& g, double t) {
  const auto& m = g.matrix();
  const double r = std::hypot(m[0], m[2]);
  const double theta = std::atan2(m[2], m[0]);
  const double s = (m[0] * m[1] + m[2] * m[3]) / r;

  // polar angle alpha = -pi t of the vector representing t
  const double band = std::floor(-t);
  const double rho = std::numbers::pi * (-t - band);
  const double phi = std::atan2(std::sin(rho) / r, r * std::cos(rho) + s * std::sin(rho));
  return -theta / std::numbers::pi - band - phi / std::numbers::pi;
}

}  // namespace

LiftedCircleMap::LiftedCircleMap(MobiusElement base, long offset)
    : base_(std::move(base)), offset_(offset) {
  double at_zero = raw_lift(base_, 0.0);
  shift_ = -std::floor(at_zero);
  if (at_zero + shift_ >= 1.0) shift_ -= 1.0;
}

double LiftedCircleMap::operator()(double x) const {
  return raw_lift(base_, x) + shift_ + static_cast<double>(offset_);
}

LiftedCircleMap LiftedCircleMap::inverse() const {
  LiftedCircleMap inv(base_.inverse(), 0);
  double y = (*this)(0.0);
  inv.offset_ = std::lround(-inv(y));
  return inv;
}

LiftedCircleMap lift(const MobiusElement& g, long k) { return LiftedCircleMap(g, k); }

LiftedCircleMap lift_through(const MobiusElement& g, double x0, double target) {
  LiftedCircleMap base(g, 0);
  return base.shifted(std::lround(target - base(x0)));
}

}  // namespace lozenge

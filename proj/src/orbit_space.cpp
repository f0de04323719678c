#include "lozenge/orbit_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lozenge/errors.hpp"

namespace lozenge {

bool in_strip(const OrbitPoint& o, double margin) { return o.u > o.s - 1.0 + margin && o.u < o.s - margin; }

OrbitPoint make_orbit_point(double u, double s) {
  OrbitPoint o{u, s};
  if (!in_strip(o))
    fail(ErrorCode::InvalidArgument, "(" + std::to_string(u) + ", " + std::to_string(s) + ") is outside the strip");
  return o;
}

double max_distance(const OrbitPoint& a, const OrbitPoint& b) {
  return std::max(std::abs(a.u - b.u), std::abs(a.s - b.s));
}

OrbitPoint eta_power(const OrbitPoint& o, int n) {
  int half = n >= 0 ? n / 2 : -((-n + 1) / 2);
  int rest = n - 2 * half;  // 0 or 1
  OrbitPoint p{o.u + half, o.s + half};
  return rest == 1 ? eta(p) : p;
}

OrbitPoint act(const LiftedCircleMap& g, const OrbitPoint& o, const Tolerance& tol) {
  double s = g(o.s);
  double u = g(o.u);
  // The lift is monotone and commutes with +1, so u already lands in (s-1, s);
  // anything else means the endpoints collapsed numerically.
  if (!tol.inside_open(u, s - 1.0, s))
    fail(ErrorCode::DegeneratePair, "image endpoints of " + format_word(g.base().word()) + " collapse");
  return {u, s};
}

PointPair project_to_universal_circle(const OrbitPoint& o) { return {CirclePoint(o.s), CirclePoint(o.u)}; }

PeriodicOrbit orbit_of_element(const MobiusElement& g, const Tolerance& tol) {
  auto axis = axis_endpoints(g, tol);
  double s = axis.attracting.angle();
  double u = axis.repelling.angle();
  if (u >= s) u -= 1.0;
  OrbitPoint o{u, s};
  if (!in_strip(o, tol.eps)) fail(ErrorCode::DegeneratePair, "axis endpoints of " + format_word(g.word()) + " coincide");
  return {o, lift_through(g, s, s)};
}

std::vector<DoubleClassEntry> double_class(const MobiusElement& g, int range, const Tolerance& tol) {
  if (range < 1) fail(ErrorCode::InvalidArgument, "range must be at least 1");
  auto orbit = orbit_of_element(g, tol);
  std::vector<DoubleClassEntry> out;
  for (int i = -range; i <= range; ++i) {
    DoubleClassEntry e;
    e.index = i;
    e.point = eta_power(orbit.point, i);
    e.pair = project_to_universal_circle(e.point);
    e.orbit_label = ((i % 2) + 2) % 2;
    e.reversed = e.orbit_label == 1;
    out.push_back(e);
  }
  return out;
}

}  // namespace lozenge

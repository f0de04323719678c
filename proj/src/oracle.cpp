#include "lozenge/oracle.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "lozenge/errors.hpp"

namespace lozenge {

namespace {

using M2 = std::array<double, 4>;

M2 mul(const M2& x, const M2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

M2 adjugate(const M2& x) { return {x[3], -x[1], -x[2], x[0]}; }

// An oriented geodesic of the upper half-plane, from `from` to `to` on the real
// line (either may be infinite).
struct Geodesic {
  double from = 0.0;
  double to = 0.0;

  bool vertical() const { return std::isinf(from) || std::isinf(to); }
  double center() const { return 0.5 * (from + to); }
  double radius() const { return 0.5 * std::abs(to - from); }
};

// Repelling -> attracting fixed points on R u {inf}.
Geodesic axis_of(const M2& m) {
  const double a = m[0], b = m[1], c = m[2], d = m[3];
  const double inf = std::numeric_limits<double>::infinity();
  const double scale = std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d);
  if (std::abs(c) <= 1e-14 * scale) {
    // fixes infinity; multiplier a/d there
    double finite = b / (d - a);
    return std::abs(a) > std::abs(d) ? Geodesic{finite, inf} : Geodesic{inf, finite};
  }
  double disc = std::sqrt((d - a) * (d - a) + 4.0 * b * c);
  double x1 = ((a - d) + disc) / (2.0 * c);
  double x2 = ((a - d) - disc) / (2.0 * c);
  // attracting iff |c x + d| > 1, i.e. derivative 1/(cx+d)^2 < 1
  bool x1_attracting = std::abs(c * x1 + d) > std::abs(c * x2 + d);
  return x1_attracting ? Geodesic{x2, x1} : Geodesic{x1, x2};
}

struct Crossing {
  double x = 0.0;
  double y = 0.0;
};

std::optional<Crossing> intersect(const Geodesic& p, const Geodesic& q) {
  if (p.vertical() && q.vertical()) return std::nullopt;
  if (p.vertical() || q.vertical()) {
    const Geodesic& line = p.vertical() ? p : q;
    const Geodesic& arc = p.vertical() ? q : p;
    double foot = std::isinf(line.from) ? line.to : line.from;
    double dx = foot - arc.center();
    if (!(std::abs(dx) < arc.radius())) return std::nullopt;
    return Crossing{foot, std::sqrt(arc.radius() * arc.radius() - dx * dx)};
  }
  double r1 = p.radius(), r2 = q.radius();
  double dist = std::abs(q.center() - p.center());
  if (!(dist > std::abs(r1 - r2) && dist < r1 + r2)) return std::nullopt;
  double along = (dist * dist + r1 * r1 - r2 * r2) / (2.0 * dist);
  double dir = q.center() > p.center() ? 1.0 : -1.0;
  double y2 = r1 * r1 - along * along;
  if (!(y2 > 0.0)) return std::nullopt;
  return Crossing{p.center() + dir * along, std::sqrt(y2)};
}

// Unit tangent of the oriented geodesic at a point on it.
std::array<double, 2> tangent(const Geodesic& g, const Crossing& z) {
  if (g.vertical()) return {0.0, std::isinf(g.to) ? 1.0 : -1.0};
  double r = g.radius();
  // clockwise (decreasing polar angle) runs from the left endpoint to the right one
  double sign = g.from < g.to ? 1.0 : -1.0;
  return {sign * z.y / r, -sign * (z.x - g.center()) / r};
}

// Signed distance along the axis, measured by the Busemann-type coordinate
// log(|z - from| / |z - to|); the element translates it by its length.
double position(const Geodesic& axis, const Crossing& z) {
  auto dist = [&](double x) { return std::hypot(z.x - x, z.y); };
  if (std::isinf(axis.to)) return std::log(dist(axis.from));
  if (std::isinf(axis.from)) return -std::log(dist(axis.to));
  return std::log(dist(axis.from) / dist(axis.to));
}

struct Key {
  double phase;
  double angle;
};

}  // namespace

OracleResult self_intersection_oracle(const MobiusElement& g, std::span<const MobiusElement> elements, int depth,
                                      const Tolerance& tol) {
  if (!is_hyperbolic(g, tol)) axis_endpoints(g, tol);  // throws NotHyperbolic

  // a fixed generic rotation about i keeps endpoints off infinity
  const double turn = 0.3819660112501051;
  const M2 rot{std::cos(turn), std::sin(turn), -std::sin(turn), std::cos(turn)};
  const M2 gm = g.matrix();
  const M2 g_rot = mul(mul(rot, gm), adjugate(rot));
  const Geodesic axis = axis_of(g_rot);
  const double length = 2.0 * std::acosh(std::abs(gm[0] + gm[3]) / 2.0);

  std::vector<Key> keys;
  for (const auto& h : elements) {
    const M2 p = mul(rot, h.matrix());
    const M2 conj = mul(mul(p, gm), adjugate(p));
    double scale = 0.0, same = 0.0, flipped = 0.0;
    for (int i = 0; i < 4; ++i) {
      scale = std::max(scale, std::abs(conj[i]));
      same = std::max(same, std::abs(conj[i] - g_rot[i]));
      flipped = std::max(flipped, std::abs(conj[i] + g_rot[i]));
    }
    if (std::min(same, flipped) <= tol.eps * std::max(1.0, scale)) continue;  // h centralizes g
    const Geodesic other = axis_of(conj);
    auto same_end = [&](double x, double y) {
      if (std::isinf(x) || std::isinf(y)) return std::isinf(x) && std::isinf(y);
      return std::abs(x - y) < tol.eps * std::max(1.0, std::abs(x));
    };
    if (same_end(other.from, axis.from) && same_end(other.to, axis.to)) continue;  // same axis
    auto z = intersect(axis, other);
    if (!z) continue;
    double phase = frac(position(axis, *z) / length);
    auto t1 = tangent(axis, *z);
    auto t2 = tangent(other, *z);
    double angle = std::atan2(t1[0] * t2[1] - t1[1] * t2[0], t1[0] * t2[0] + t1[1] * t2[1]);
    bool seen = false;
    for (const auto& k : keys) {
      double dp = std::abs(k.phase - phase);
      dp = std::min(dp, 1.0 - dp);
      if (dp < 1e-6 && std::abs(k.angle - angle) < 1e-6) {
        seen = true;
        break;
      }
    }
    if (!seen) keys.push_back({phase, angle});
  }

  OracleResult result;
  result.depth = depth;
  result.crossing_classes = static_cast<int>(keys.size());
  // each double point is seen from both of its passes along the closed geodesic
  result.lower_bound = (result.crossing_classes + 1) / 2;
  return result;
}

int self_intersection_oracle(const MobiusElement& g, const GroupSpec& group, int depth,
                             const EnumerationOptions& options) {
  if (!is_hyperbolic(g, options.tol)) axis_endpoints(g, options.tol);
  auto elements = enumerate_elements(group, depth, options);
  return self_intersection_oracle(g, elements, depth, options.tol).lower_bound;
}

}  // namespace lozenge

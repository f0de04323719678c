#include "lozenge/cocylinder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lozenge/errors.hpp"
#include "lozenge/oracle.hpp"

namespace lozenge {

bool linked(const PointPair& p, const PointPair& q, const Tolerance& tol) {
  const CirclePoint pts[4] = {p.a_plus, p.a_minus, q.a_plus, q.a_minus};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(circle_distance(pts[i], pts[j]) > tol.eps))
        fail(ErrorCode::DegeneratePoints, "circle points " + std::to_string(pts[i].angle()) + " and " +
                                              std::to_string(pts[j].angle()) + " are not separated");
  int inside = (in_open_arc(q.a_plus, p.a_minus, p.a_plus) ? 1 : 0) +
               (in_open_arc(q.a_minus, p.a_minus, p.a_plus) ? 1 : 0);
  return inside == 1;
}

namespace {

struct BoundedPoint {
  CirclePoint point;
  double error;
};

constexpr double kRound = std::numeric_limits<double>::epsilon();
constexpr double kInputError = 1e-15;  // accuracy of axis endpoints

BoundedPoint bounded_image(const MobiusElement& h, CirclePoint p) {
  const double alpha = -std::numbers::pi * p.angle();
  const double x = std::cos(alpha), y = std::sin(alpha);
  const auto& m = h.matrix();
  const double u = m[0] * x + m[1] * y;
  const double v = m[2] * x + m[3] * y;
  const double len = std::hypot(u, v);
  const double mass = std::abs(m[0]) + std::abs(m[1]) + std::abs(m[2]) + std::abs(m[3]);
  // |d angle| <= |d(hv)_perp| / (pi |hv|); determinant one gives |h'| = 1 / |hv|^2
  const double error = (kInputError + 8.0 * kRound) / (len * len) + 8.0 * kRound * mass / len + 8.0 * kRound;
  return {CirclePoint::from_vector(u, v), error};
}

}  // namespace

bool linked_image(const PointPair& p, const MobiusElement& h) {
  const BoundedPoint pts[4] = {{p.a_plus, kInputError},
                               {p.a_minus, kInputError},
                               bounded_image(h, p.a_plus),
                               bounded_image(h, p.a_minus)};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(circle_distance(pts[i].point, pts[j].point) > 4.0 * (pts[i].error + pts[j].error)))
        fail(ErrorCode::DegeneratePoints, "circle points " + std::to_string(pts[i].point.angle()) + " and " +
                                              std::to_string(pts[j].point.angle()) +
                                              " are not separated beyond rounding");
  const int inside = (in_open_arc(pts[2].point, p.a_minus, p.a_plus) ? 1 : 0) +
                     (in_open_arc(pts[3].point, p.a_minus, p.a_plus) ? 1 : 0);
  return inside == 1;
}

PointPair act_on_pair(const MobiusElement& h, const PointPair& p) { return {h.apply(p.a_plus), h.apply(p.a_minus)}; }

bool fixes_pair(const MobiusElement& h, const PointPair& p, const Tolerance& tol) {
  auto image = act_on_pair(h, p);
  return circle_distance(image.a_plus, p.a_plus) < tol.eps && circle_distance(image.a_minus, p.a_minus) < tol.eps;
}

bool stabilizes_axis(const MobiusElement& h, const MobiusElement& g, const PointPair& p, const Tolerance& tol) {
  if (fixes_pair(h, p, tol)) return true;
  const auto& x = h.matrix();
  const auto& y = g.matrix();
  const std::array<double, 4> hg{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                                 x[2] * y[1] + x[3] * y[3]};
  const std::array<double, 4> gh{y[0] * x[0] + y[1] * x[2], y[0] * x[1] + y[1] * x[3], y[2] * x[0] + y[3] * x[2],
                                 y[2] * x[1] + y[3] * x[3]};
  double scale = 0.0, same = 0.0, flipped = 0.0;
  for (int i = 0; i < 4; ++i) {
    scale = std::max(scale, std::abs(hg[i]));
    same = std::max(same, std::abs(hg[i] - gh[i]));
    flipped = std::max(flipped, std::abs(hg[i] + gh[i]));
  }
  return std::min(same, flipped) <= tol.eps * std::max(1.0, scale);
}

LinkingResult find_linking_witness(const MobiusElement& g, std::span<const MobiusElement> elements, int depth,
                                   const Tolerance& tol) {
  const PointPair pair = project_to_universal_circle(orbit_of_element(g, tol).point);
  LinkingResult result;
  result.depth = depth;
  for (const auto& h : elements) {
    if (stabilizes_axis(h, g, pair, tol)) continue;
    PointPair image = act_on_pair(h, pair);
    if (linked_image(pair, h)) {
      result.witness = LinkingWitness{h, pair, image};
      break;
    }
  }
  return result;
}

LinkingResult find_linking_witness(const MobiusElement& g, const GroupSpec& group, int depth,
                                   const EnumerationOptions& options) {
  if (!is_hyperbolic(g, options.tol)) axis_endpoints(g, options.tol);  // throws NotHyperbolic
  auto elements = enumerate_elements(group, depth, options);
  return find_linking_witness(g, elements, depth, options.tol);
}

void check_consistency(std::pair<bool, int> lozenge, std::pair<bool, int> linking, std::pair<bool, int> oracle) {
  struct Verdict {
    const char* name;
    bool found;
    int depth;
  };
  const Verdict all[3] = {{"lozenge", lozenge.first, lozenge.second},
                          {"linking", linking.first, linking.second},
                          {"oracle", oracle.first, oracle.second}};
  // The criteria are equivalent for each h, so a witness at depth d must be
  // visible to every search that enumerates at least depth d.
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (&x == &y) continue;
      if (x.found && x.depth <= y.depth && !y.found)
        fail(ErrorCode::InconsistentVerdicts, std::string(x.name) + " found a witness at depth " +
                                                  std::to_string(x.depth) + " but " + y.name +
                                                  " found none at depth " + std::to_string(y.depth));
    }
  }
}

CocylReport cocyl_report(const MobiusElement& g, ElementCache& cache, const SearchDepths& depths, int partner_range) {
  if (partner_range < 1) fail(ErrorCode::InvalidArgument, "partner range must be at least 1");
  const Tolerance& tol = cache.tolerance();
  CocylReport report;
  report.word = g.word();
  report.depths = depths;
  report.partner_range = partner_range;
  report.base = orbit_of_element(g, tol).point;

  auto lozenge_elems = cache.elements(depths.lozenge);
  report.simple_verdict = simplicity_check(chain_between(report.base, 1), lozenge_elems, depths.lozenge, tol);
  report.linking = find_linking_witness(g, cache.elements(depths.linking), depths.linking, tol);
  report.oracle = self_intersection_oracle(g, cache.elements(depths.oracle), depths.oracle, tol);

  lozenge_elems = cache.elements(depths.lozenge);  // the cache may have grown
  for (int n = 1; n <= partner_range; ++n) {
    auto cert = n == 1 ? report.simple_verdict
                       : simplicity_check(chain_between(report.base, n), lozenge_elems, depths.lozenge, tol);
    if (cert.no_witness()) report.partner_indices.push_back(n);
    report.partner_certificates.push_back(std::move(cert));
  }

  check_consistency({report.non_simple(), depths.lozenge}, {report.linking.witness.has_value(), depths.linking},
                    {report.oracle.lower_bound >= 1, depths.oracle});
  return report;
}

bool partner_sets_agree(std::span<const std::vector<int>> sets) {
  return std::all_of(sets.begin(), sets.end(), [&](const auto& s) { return s == sets.front(); });
}

NonSimpleWitness eta_transport(const NonSimpleWitness& w, int shift) {
  // eta commutes with every lift, so the same (h, k) witnesses the shifted chain
  NonSimpleWitness moved = w;
  moved.corner_index += shift;
  moved.lozenge_index += shift;
  return moved;
}

ShiftCheck cardinality_shift_check(const MobiusElement& g, ElementCache& cache, int depth, int partner_range,
                                   const WitnessTransport& transport) {
  if (partner_range < 1) fail(ErrorCode::InvalidArgument, "partner range must be at least 1");
  const Tolerance& tol = cache.tolerance();
  const OrbitPoint base = orbit_of_element(g, tol).point;
  auto elements = cache.elements(depth);

  ShiftCheck check;
  check.witnesses_transported = true;
  std::vector<std::optional<NonSimpleWitness>> base_witnesses;
  for (int shift = 0; shift <= 2; ++shift) {
    std::vector<int> partners;
    for (int n = 1; n <= partner_range; ++n) {
      Chain chain = chain_between(base, n).shifted(shift);
      auto cert = simplicity_check(chain, elements, depth, tol);
      if (cert.no_witness()) partners.push_back(n);
      if (shift == 0) {
        base_witnesses.push_back(cert.witness);
        continue;
      }
      const auto& w0 = base_witnesses[static_cast<std::size_t>(n - 1)];
      if (!w0) continue;
      if (!reverify(chain, transport(*w0, shift), tol)) check.witnesses_transported = false;
    }
    check.partner_sets.push_back(std::move(partners));
  }
  check.sets_agree = partner_sets_agree(check.partner_sets);
  check.ok = check.sets_agree && check.witnesses_transported;
  return check;
}

}  // namespace lozenge

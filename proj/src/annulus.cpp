#include "lozenge/annulus.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "lozenge/cocylinder.hpp"
#include "lozenge/errors.hpp"

namespace lozenge {

LeafInterval leaf_interval(const OrbitPoint& o) { return {o.s, o.u + 1.0}; }

const char* arc_class_name(ArcClass c) {
  switch (c) {
    case ArcClass::InteriorEnding: return "InteriorEnding";
    case ArcClass::BoundaryIdentification: return "BoundaryIdentification";
    case ArcClass::StrictlyContained: return "StrictlyContained";
  }
  return "?";
}

const char* sign_profile_name(SignProfile s) {
  switch (s) {
    case SignProfile::AllUp: return "AllUp";
    case SignProfile::AllDown: return "AllDown";
    case SignProfile::Mixed: return "Mixed";
  }
  return "?";
}

int default_samples(int depth) { return std::min(4096, 1 << std::min(12, 5 + std::max(0, depth) / 4)); }

namespace {

struct Profile {
  SignProfile sign = SignProfile::AllUp;
  double min_gap = 0.0;
};

// Samples h(t) - t on [x0, x1]; the displacement of a Mobius lift has at most
// two zeros per period, so a grid plus local refinement at the smallest sample
// finds any sign change that matters at this resolution.
Profile sign_profile(const LiftedCircleMap& h, double x0, double x1, int samples, const Tolerance& tol) {
  auto f = [&](double t) { return h(t) - t; };
  const int n = std::max(samples, 2);
  std::vector<double> ts(static_cast<std::size_t>(n) + 2);
  std::vector<double> fs(ts.size());
  for (std::size_t m = 0; m < ts.size(); ++m) {
    ts[m] = m + 1 == ts.size() ? x1 : x0 + (x1 - x0) * static_cast<double>(m) / static_cast<double>(n + 1);
    fs[m] = f(ts[m]);
  }
  bool up = false, down = false, flat = false;
  for (std::size_t m = 0; m < fs.size(); ++m) {
    const bool endpoint = m == 0 || m + 1 == fs.size();
    if (fs[m] > tol.eps)
      up = true;
    else if (fs[m] < -tol.eps)
      down = true;
    else if (!endpoint)
      flat = true;  // a closed-overlap endpoint may sit on a boundary leaf
  }
  Profile p;
  if (flat || (up && down)) {
    p.sign = SignProfile::Mixed;
    p.min_gap = 0.0;
    return p;
  }
  const double sigma = up ? 1.0 : -1.0;
  p.sign = up ? SignProfile::AllUp : SignProfile::AllDown;

  std::size_t best = 0;
  for (std::size_t m = 0; m < fs.size(); ++m)
    if (sigma * fs[m] < sigma * fs[best]) best = m;
  double gap = sigma * fs[best];

  double a = ts[best == 0 ? 0 : best - 1];
  double b = ts[std::min(best + 1, ts.size() - 1)];
  for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
    double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
    if (sigma * f(m1) < sigma * f(m2))
      b = m2;
    else
      a = m1;
  }
  double refined_t = 0.5 * (a + b);
  double refined = sigma * f(refined_t);
  gap = std::min(gap, refined);
  bool interior = refined_t > x0 + tol.eps && refined_t < x1 - tol.eps;
  if (interior && refined <= tol.eps) {
    p.sign = SignProfile::Mixed;
    gap = std::min(gap, 0.0);
  }
  p.min_gap = gap;
  return p;
}

ArcClass classify_arc(double image_lo, double image_hi, const LeafInterval& I, const Tolerance& tol) {
  bool lo_fixed = tol.near(image_lo, I.lo);
  bool hi_fixed = tol.near(image_hi, I.hi);
  if (lo_fixed && hi_fixed)
    fail(ErrorCode::AmbiguousGeometry, "image interval coincides with I for an element outside the stabilizer");
  if (lo_fixed || hi_fixed) return ArcClass::BoundaryIdentification;
  bool inside = image_lo > I.lo + tol.eps && image_hi < I.hi - tol.eps;
  bool over = image_lo < I.lo - tol.eps && image_hi > I.hi + tol.eps;
  if (inside || over) return ArcClass::StrictlyContained;
  return ArcClass::InteriorEnding;
}

}  // namespace

CrossingSearch crossing_elements(const MobiusElement& g, std::span<const MobiusElement> elements, int depth,
                                 const AnnulusOptions& options) {
  const Tolerance& tol = options.tol;
  const int samples = options.samples > 0 ? options.samples : default_samples(depth);
  CrossingSearch search;
  search.depth = depth;
  search.orbit = orbit_of_element(g, tol).point;
  search.interval = leaf_interval(search.orbit);
  const LeafInterval& I = search.interval;
  const PointPair pair = project_to_universal_circle(search.orbit);

  for (const auto& h : elements) {
    if (stabilizes_axis(h, g, pair, tol)) continue;  // identity and the deck action of the annulus itself
    LiftedCircleMap base(h, 0);
    const double a0 = base(I.lo);
    const double b0 = base(I.hi);
    const long k_first = static_cast<long>(std::floor(I.lo - b0));
    const long k_last = static_cast<long>(std::ceil(I.hi - a0));
    std::optional<bool> is_linked;
    for (long k = k_first; k <= k_last; ++k) {
      const double a = a0 + static_cast<double>(k);
      const double b = b0 + static_cast<double>(k);
      const double overlap = std::min(I.hi, b) - std::max(I.lo, a);
      if (!(overlap > tol.eps)) continue;
      if (!is_linked) is_linked = linked_image(pair, h);
      search.candidates.push_back({h, k, a, b, *is_linked});
      if (!*is_linked) continue;

      LiftedCircleMap hk = base.shifted(k);
      LiftedCircleMap inv = hk.inverse();
      CrossingArc arc;
      arc.element = h;
      arc.offset = k;
      const double src_lo = std::max(I.lo, inv(I.lo));
      const double src_hi = std::min(I.hi, inv(I.hi));
      arc.source = {I.normalize(src_lo), I.normalize(src_hi)};
      arc.target = {I.normalize(std::max(I.lo, a)), I.normalize(std::min(I.hi, b))};
      arc.classification = classify_arc(a, b, I, tol);
      arc.coherent = a >= I.lo - tol.eps && a <= I.hi + tol.eps;
      Profile p = sign_profile(hk, src_lo, src_hi, samples, tol);
      arc.sign_profile = p.sign;
      arc.min_gap = p.min_gap;
      search.arcs.push_back(std::move(arc));
    }
  }
  return search;
}

CrossingSearch crossing_elements(const MobiusElement& g, const GroupSpec& group, int depth,
                                 const AnnulusOptions& options, std::uint64_t cap) {
  if (!is_hyperbolic(g, options.tol)) axis_endpoints(g, options.tol);
  EnumerationOptions eo;
  eo.cap = cap;
  eo.tol = options.tol;
  auto elements = enumerate_elements(group, depth, eo);
  return crossing_elements(g, elements, depth, options);
}

bool verify_claim(std::span<const CrossingArc> arcs) {
  return std::none_of(arcs.begin(), arcs.end(),
                      [](const CrossingArc& a) { return a.classification == ArcClass::StrictlyContained; });
}

IsotopyCertificate build_trivialization(const LeafInterval& interval, std::vector<CrossingArc> arcs, int samples,
                                        const Tolerance& tol) {
  if (!verify_claim(arcs))
    fail(ErrorCode::InvalidArgument, "an arc maps I strictly into itself; no trivialization is attempted");
  IsotopyCertificate cert;
  for (auto& arc : arcs) {
    LiftedCircleMap h = lift(arc.element, arc.offset);
    Profile p = sign_profile(h, interval.denormalize(arc.source.lo), interval.denormalize(arc.source.hi), samples, tol);
    if (p.sign == SignProfile::Mixed)
      fail(ErrorCode::MixedSignProfile, "h(t) - t changes sign on the overlap of " + format_word(arc.element.word()) +
                                            " (offset " + std::to_string(arc.offset) + ")");
    arc.sign_profile = p.sign;
    arc.min_gap = p.min_gap;
    cert.min_gap = std::min(cert.min_gap, p.min_gap);
  }

  // distinct arcs live in distinct vertical fibres
  bool distinct = std::all_of(arcs.begin(), arcs.end(), [](const CrossingArc& a) { return std::isfinite(a.vertical); });
  for (std::size_t i = 0; distinct && i < arcs.size(); ++i)
    for (std::size_t j = i + 1; distinct && j < arcs.size(); ++j)
      if (tol.near(arcs[i].vertical, arcs[j].vertical)) distinct = false;
  if (!distinct)
    for (std::size_t i = 0; i < arcs.size(); ++i)
      arcs[i].vertical = (static_cast<double>(i) + 0.5) / static_cast<double>(arcs.size());

  cert.schedule_ok = arcs.empty() || cert.min_gap > tol.eps;
  cert.arcs = std::move(arcs);
  return cert;
}

}  // namespace lozenge

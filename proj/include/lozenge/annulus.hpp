#pragma once

#include <limits>
#include <span>
#include <vector>

#include "lozenge/group.hpp"
#include "lozenge/lozenge.hpp"
#include "lozenge/orbit_space.hpp"

namespace lozenge {

// The stable-leaf interval I = [s, u + 1] between the stable leaves of a
// periodic orbit o = (u, s) and of eta(o).
struct LeafInterval {
  double lo = 0.0;
  double hi = 1.0;

  double length() const { return hi - lo; }
  double normalize(double x) const { return (x - lo) / (hi - lo); }
  double denormalize(double t) const { return lo + t * (hi - lo); }
};

LeafInterval leaf_interval(const OrbitPoint& o);

enum class ArcClass { InteriorEnding, BoundaryIdentification, StrictlyContained };
enum class SignProfile { AllUp, AllDown, Mixed };
const char* arc_class_name(ArcClass c);
const char* sign_profile_name(SignProfile s);

// A self-intersection arc of the annulus, given by a lifted element h whose
// image of I overlaps I. Intervals are normalized so that I is [0, 1].
struct CrossingArc {
  MobiusElement element;
  long offset = 0;
  Interval source;  // I intersected with h^-1(I)
  Interval target;  // h(I) intersected with I
  ArcClass classification = ArcClass::InteriorEnding;
  SignProfile sign_profile = SignProfile::AllUp;
  double min_gap = 0.0;  // inf of |h(t) - t| over the closed source interval
  bool coherent = false; // h(lo) lies in I: the normalization where h(F_0) is in I
  double vertical = std::numeric_limits<double>::quiet_NaN();  // fibre of the trivialization
};

struct AnnulusOptions {
  Tolerance tol;
  int samples = 0;  // 0: 2^(5 + depth/4), capped at 4096
};

int default_samples(int depth);

// Every (h, k) with a length > eps overlap, before the linking filter.
struct OverlapCandidate {
  MobiusElement element;
  long offset = 0;
  double image_lo = 0.0;
  double image_hi = 0.0;
  bool linked = false;
};

struct CrossingSearch {
  OrbitPoint orbit;
  LeafInterval interval;
  int depth = 0;
  std::vector<OverlapCandidate> candidates;
  std::vector<CrossingArc> arcs;  // one per linked candidate, same order
};

// Scans (h, k) over the enumeration and the offset window, excluding the
// stabilizer of the orbit. Only candidates whose endpoint pair links the
// orbit's pair become arcs. Throws AmbiguousGeometry when an arc cannot be
// classified.
CrossingSearch crossing_elements(const MobiusElement& g, std::span<const MobiusElement> elements, int depth,
                                 const AnnulusOptions& options = {});
CrossingSearch crossing_elements(const MobiusElement& g, const GroupSpec& group, int depth,
                                 const AnnulusOptions& options = {}, std::uint64_t cap = 1'000'000);

// False iff some arc maps I strictly into itself (or strictly over itself).
bool verify_claim(std::span<const CrossingArc> arcs);

struct IsotopyCertificate {
  std::vector<CrossingArc> arcs;
  bool schedule_ok = true;
  double min_gap = std::numeric_limits<double>::infinity();
};

// Recomputes sign profiles by sampling h(t) - t, assigns pairwise distinct
// vertical fibres, and records the smallest gap. Throws MixedSignProfile when
// h(t) - t changes sign on an overlap.
IsotopyCertificate build_trivialization(const LeafInterval& interval, std::vector<CrossingArc> arcs, int samples,
                                        const Tolerance& tol = {});

}  // namespace lozenge

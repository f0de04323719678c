#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lozenge/group.hpp"
#include "lozenge/orbit_space.hpp"

namespace lozenge {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
};

// The lozenge with corners o and eta(o). Its interior is the open rectangle
// u < u' < s, s < s' < u + 1; both leaf spaces are oriented by increasing
// coordinate, so every lozenge has type (+,+,-,-). The sides are read off the
// two stored corners, so lozenges that share a corner share its coordinates
// bit for bit.
class Lozenge {
 public:
  explicit Lozenge(const OrbitPoint& corner) : corner_(corner), opposite_(eta(corner)) {}
  // `opposite` must equal eta(corner) up to rounding; chains pass their own
  // next corner here.
  Lozenge(const OrbitPoint& corner, const OrbitPoint& opposite) : corner_(corner), opposite_(opposite) {}
  const OrbitPoint& corner() const { return corner_; }
  const OrbitPoint& opposite() const { return opposite_; }
  Interval u_range() const { return {corner_.u, opposite_.u}; }
  Interval s_range() const { return {corner_.s, opposite_.s}; }
  OrbitPoint center() const {
    return {0.5 * (corner_.u + opposite_.u), 0.5 * (corner_.s + opposite_.s)};
  }

 private:
  OrbitPoint corner_;
  OrbitPoint opposite_;
};

Lozenge lozenge_of(const OrbitPoint& o);

enum class Membership { Inside, Outside, BoundaryAmbiguous };
const char* membership_name(Membership m);

// Open-set membership with an eps margin. Corners are reported Outside; any
// other point within eps of a side is BoundaryAmbiguous.
Membership contains(const Lozenge& lozenge, const OrbitPoint& p, const Tolerance& tol = {});

// Lozenges with corners eta^i(base) for lo <= i < hi; corners run lo..hi.
class Chain {
 public:
  Chain(const OrbitPoint& base, int lo, int hi);

  const OrbitPoint& base() const { return base_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int size() const { return hi_ - lo_; }
  OrbitPoint corner(int i) const { return eta_power(base_, i); }
  Lozenge lozenge(int i) const { return Lozenge(corner(i), corner(i + 1)); }
  Chain shifted(int n) const { return Chain(base_, lo_ + n, hi_ + n); }

 private:
  OrbitPoint base_;
  int lo_;
  int hi_;
};

// The chain B(o, eta^n(o)).
inline Chain chain_between(const OrbitPoint& o, int n) { return Chain(o, 0, n); }

// Interiors of distinct lozenges have disjoint u-ranges and disjoint s-ranges,
// so no leaf meets two of them and consecutive ones share no side.
bool check_side_disjoint(const Chain& chain);

// Whether the lift fixing o also fixes the opposite corner eta(o).
bool check_stabilized(const LiftedCircleMap& g0, const Lozenge& lozenge, const Tolerance& tol = {});

struct NonSimpleWitness {
  MobiusElement element;
  long offset = 0;
  int corner_index = 0;
  int lozenge_index = 0;
  OrbitPoint image;
};

struct SimplicityCertificate {
  int depth = 0;
  std::optional<NonSimpleWitness> witness;  // empty: no witness up to depth

  bool no_witness() const { return !witness.has_value(); }
};

// Searches the translates of the chain's corners by `elements` for one inside
// a lozenge of the chain. The first witness in (element, corner, lozenge,
// offset) order is returned. Throws AmbiguousGeometry on a boundary hit.
SimplicityCertificate simplicity_check(const Chain& chain, std::span<const MobiusElement> elements, int depth,
                                       const Tolerance& tol = {});
SimplicityCertificate simplicity_check(const Chain& chain, const GroupSpec& group, int depth,
                                       const EnumerationOptions& options = {});

// Recomputes a witness's image and checks it lies inside with margin > eps.
bool reverify(const Chain& chain, const NonSimpleWitness& witness, const Tolerance& tol = {});

}  // namespace lozenge

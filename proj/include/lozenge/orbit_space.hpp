#pragma once

#include <vector>

#include "lozenge/circle.hpp"
#include "lozenge/lift.hpp"
#include "lozenge/mobius.hpp"

namespace lozenge {

// A point of the orbit space in strip coordinates: u is the lifted backward
// endpoint (unstable leaf), s the lifted forward endpoint (stable leaf).
// Valid points satisfy s - 1 < u < s.
struct OrbitPoint {
  double u = 0.0;
  double s = 0.5;

  friend bool operator==(const OrbitPoint&, const OrbitPoint&) = default;
};

bool in_strip(const OrbitPoint& o, double margin = 0.0);
// Throws InvalidArgument unless the point lies in the strip.
OrbitPoint make_orbit_point(double u, double s);
double max_distance(const OrbitPoint& a, const OrbitPoint& b);

// Points of the universal circle carried by an orbit: forward and backward.
struct PointPair {
  CirclePoint a_plus;
  CirclePoint a_minus;

  PointPair swapped() const { return {a_minus, a_plus}; }
};

// Leaf-space bounds. eta_s : stable -> unstable, eta_u : unstable -> stable,
// with inverses eta_minus_s and eta_minus_u.
inline double eta_s(double s) { return s; }
inline double eta_u(double u) { return u + 1.0; }
inline double eta_minus_u(double s) { return s - 1.0; }
inline double eta_minus_s(double u) { return u; }

inline OrbitPoint eta(const OrbitPoint& o) { return {eta_s(o.s), eta_u(o.u)}; }
inline OrbitPoint eta_inverse(const OrbitPoint& o) { return {eta_minus_u(o.s), eta_minus_s(o.u)}; }
// eta^n; even powers are the exact diagonal shift by n/2.
OrbitPoint eta_power(const OrbitPoint& o, int n);

// Lifted action of a group element. Throws DegeneratePair when the image of
// the two endpoints collapses within eps.
OrbitPoint act(const LiftedCircleMap& g, const OrbitPoint& o, const Tolerance& tol = {});

PointPair project_to_universal_circle(const OrbitPoint& o);

struct PeriodicOrbit {
  OrbitPoint point;
  LiftedCircleMap stabilizer;  // the lift of g fixing point
};

// The lifted closed orbit of a hyperbolic element: s in [0,1) is its
// attracting endpoint, u its repelling endpoint lifted into (s - 1, s).
PeriodicOrbit orbit_of_element(const MobiusElement& g, const Tolerance& tol = {});

struct DoubleClassEntry {
  int index = 0;
  OrbitPoint point;
  PointPair pair;
  int orbit_label = 0;    // index mod 2: entries with equal labels are the same closed orbit
  bool reversed = false;  // odd iterates run backwards
};

std::vector<DoubleClassEntry> double_class(const MobiusElement& g, int range, const Tolerance& tol = {});

}  // namespace lozenge

#pragma once

#include "lozenge/mobius.hpp"

namespace lozenge {

// A degree-one lift x -> lambda(g, x) + k of the boundary action of g to R,
// where lambda is the canonical lift normalized by lambda(g, 0) in [0, 1).
class LiftedCircleMap {
 public:
  LiftedCircleMap() = default;
  LiftedCircleMap(MobiusElement base, long offset);

  const MobiusElement& base() const { return base_; }
  long offset() const { return offset_; }

  double operator()(double x) const;
  // The lift of g^-1 that inverts this map.
  LiftedCircleMap inverse() const;
  // Same element, offset shifted by dk (the central action eta^{2dk}).
  LiftedCircleMap shifted(long dk) const { return LiftedCircleMap(base_, offset_ + dk, shift_); }

 private:
  LiftedCircleMap(MobiusElement base, long offset, double shift)
      : base_(std::move(base)), offset_(offset), shift_(shift) {}

  MobiusElement base_;
  long offset_ = 0;
  double shift_ = 0.0;  // integer making the raw lift canonical
};

LiftedCircleMap lift(const MobiusElement& g, long k);
inline double evaluate(const LiftedCircleMap& map, double x) { return map(x); }

// The lift of g with the offset that sends x0 closest to target.
LiftedCircleMap lift_through(const MobiusElement& g, double x0, double target);

}  // namespace lozenge

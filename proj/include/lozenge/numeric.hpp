#pragma once

#include <cmath>

namespace lozenge {

inline constexpr double kDefaultEpsilon = 1e-9;

// Every tolerance decision in the library goes through this type.
struct Tolerance {
  double eps = kDefaultEpsilon;

  bool near(double a, double b) const { return std::abs(a - b) < eps; }
  bool near_zero(double a) const { return std::abs(a) < eps; }
  // a < b with a margin of eps
  bool clearly_less(double a, double b) const { return a < b - eps; }
  bool clearly_greater(double a, double b) const { return a > b + eps; }
  // strict inclusion in the open interval (lo, hi) with margin
  bool inside_open(double x, double lo, double hi) const {
    return clearly_greater(x, lo) && clearly_less(x, hi);
  }
};

// Fractional part in [0,1); guards against 1.0 produced by rounding.
inline double frac(double x) {
  double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

}  // namespace lozenge

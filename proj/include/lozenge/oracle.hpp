#pragma once

#include <span>

#include "lozenge/cocylinder.hpp"

namespace lozenge {

// Independent check of closed-geodesic simplicity. Works directly in the upper
// half-plane: the axis of g and the axis of each conjugate h g h^-1 are
// semicircles (after a fixed generic rotation moves every endpoint off
// infinity), and transverse crossings are decided by circle geometry. Distinct
// crossings are keyed by the crossing position along the axis modulo the
// translation length and the crossing angle.
OracleResult self_intersection_oracle(const MobiusElement& g, std::span<const MobiusElement> elements, int depth,
                                      const Tolerance& tol = {});
int self_intersection_oracle(const MobiusElement& g, const GroupSpec& group, int depth,
                             const EnumerationOptions& options = {});

}  // namespace lozenge

#include "lozenge/lozenge.hpp"

#include <cmath>

#include "lozenge/errors.hpp"

namespace lozenge {

Lozenge lozenge_of(const OrbitPoint& o) { return Lozenge(o); }

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::Inside: return "Inside";
    case Membership::Outside: return "Outside";
    case Membership::BoundaryAmbiguous: return "BoundaryAmbiguous";
  }
  return "?";
}

namespace {

enum class Side { Below, OnLow, Inside, OnHigh, Above };

Side locate(double x, Interval range, const Tolerance& tol) {
  if (tol.near(x, range.lo)) return Side::OnLow;
  if (tol.near(x, range.hi)) return Side::OnHigh;
  if (x < range.lo) return Side::Below;
  if (x > range.hi) return Side::Above;
  return Side::Inside;
}

}  // namespace

Membership contains(const Lozenge& lozenge, const OrbitPoint& p, const Tolerance& tol) {
  Side u = locate(p.u, lozenge.u_range(), tol);
  Side s = locate(p.s, lozenge.s_range(), tol);
  auto outside = [](Side x) { return x == Side::Below || x == Side::Above; };
  if (outside(u) || outside(s)) return Membership::Outside;
  if (u == Side::Inside && s == Side::Inside) return Membership::Inside;
  // corner o = (u.lo, s.lo) and eta(o) = (u.hi, s.hi)
  if ((u == Side::OnLow && s == Side::OnLow) || (u == Side::OnHigh && s == Side::OnHigh)) return Membership::Outside;
  return Membership::BoundaryAmbiguous;
}

Chain::Chain(const OrbitPoint& base, int lo, int hi) : base_(base), lo_(lo), hi_(hi) {
  if (hi < lo) fail(ErrorCode::InvalidArgument, "chain bounds must satisfy lo <= hi");
  if (!in_strip(base)) fail(ErrorCode::InvalidArgument, "chain base is outside the strip");
}

bool check_side_disjoint(const Chain& chain) {
  for (int i = chain.lo(); i < chain.hi(); ++i) {
    for (int j = i + 1; j < chain.hi(); ++j) {
      Interval ui = chain.lozenge(i).u_range(), uj = chain.lozenge(j).u_range();
      Interval si = chain.lozenge(i).s_range(), sj = chain.lozenge(j).s_range();
      if (!(ui.hi <= uj.lo || uj.hi <= ui.lo)) return false;
      if (!(si.hi <= sj.lo || sj.hi <= si.lo)) return false;
    }
  }
  return true;
}

bool check_stabilized(const LiftedCircleMap& g0, const Lozenge& lozenge, const Tolerance& tol) {
  OrbitPoint beta = lozenge.opposite();
  OrbitPoint image{g0(beta.u), g0(beta.s)};
  return max_distance(image, beta) < tol.eps;
}

SimplicityCertificate simplicity_check(const Chain& chain, std::span<const MobiusElement> elements, int depth,
                                       const Tolerance& tol) {
  SimplicityCertificate cert;
  cert.depth = depth;
  for (const auto& g : elements) {
    LiftedCircleMap base(g, 0);
    for (int i = chain.lo(); i <= chain.hi(); ++i) {
      OrbitPoint c = chain.corner(i);
      OrbitPoint image0{base(c.u), base(c.s)};
      for (int j = chain.lo(); j < chain.hi(); ++j) {
        Interval ur = chain.lozenge(j).u_range();
        // the u-range has width < 1, so at most two integer shifts survive the eps slack
        long k_lo = static_cast<long>(std::ceil(ur.lo - image0.u - tol.eps));
        long k_hi = static_cast<long>(std::floor(ur.hi - image0.u + tol.eps));
        for (long k = k_lo; k <= k_hi; ++k) {
          OrbitPoint image{image0.u + static_cast<double>(k), image0.s + static_cast<double>(k)};
          switch (contains(chain.lozenge(j), image, tol)) {
            case Membership::Outside:
              break;
            case Membership::Inside:
              cert.witness = NonSimpleWitness{g, k, i, j, image};
              return cert;
            case Membership::BoundaryAmbiguous:
              fail(ErrorCode::AmbiguousGeometry, "translate of corner " + std::to_string(i) + " by " +
                                                     format_word(g.word()) + " lies on a side of lozenge " +
                                                     std::to_string(j));
          }
        }
      }
    }
  }
  return cert;
}

SimplicityCertificate simplicity_check(const Chain& chain, const GroupSpec& group, int depth,
                                       const EnumerationOptions& options) {
  auto elements = enumerate_elements(group, depth, options);
  return simplicity_check(chain, elements, depth, options.tol);
}

bool reverify(const Chain& chain, const NonSimpleWitness& witness, const Tolerance& tol) {
  if (witness.lozenge_index < chain.lo() || witness.lozenge_index >= chain.hi()) return false;
  if (witness.corner_index < chain.lo() || witness.corner_index > chain.hi()) return false;
  OrbitPoint image = act(lift(witness.element, witness.offset), chain.corner(witness.corner_index), tol);
  return contains(chain.lozenge(witness.lozenge_index), image, tol) == Membership::Inside;
}

}  // namespace lozenge

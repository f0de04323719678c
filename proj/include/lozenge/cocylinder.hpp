#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lozenge/group.hpp"
#include "lozenge/lozenge.hpp"
#include "lozenge/orbit_space.hpp"

namespace lozenge {

// Cyclic linking a- < b- < a+ < b+ (for either orientation): exactly one point
// of q lies in the open arc from p.a_minus to p.a_plus. Throws
// DegeneratePoints unless all four points are pairwise more than eps apart.
bool linked(const PointPair& p, const PointPair& q, const Tolerance& tol = {});

// Linking of p with h.p decided at the resolution of the computed images rather than
// at eps: each image angle carries a forward error bound derived from the entries of
// h and the length of the image vector. Throws DegeneratePoints only when two points
// are not separated beyond their combined error bounds.
bool linked_image(const PointPair& p, const MobiusElement& h);

PointPair act_on_pair(const MobiusElement& h, const PointPair& p);
// h fixes both points of the pair (h lies in the stabilizer of the orbit).
bool fixes_pair(const MobiusElement& h, const PointPair& p, const Tolerance& tol = {});
// True when h lies in the stabilizer of the axis of g: either h fixes the endpoint
// pair, or h commutes with g projectively up to a relative error of eps. The second
// test stays reliable for high powers of g whose boundary action amplifies rounding.
bool stabilizes_axis(const MobiusElement& h, const MobiusElement& g, const PointPair& p, const Tolerance& tol = {});

struct LinkingWitness {
  MobiusElement element;
  PointPair pair;
  PointPair image_pair;
};

struct LinkingResult {
  int depth = 0;
  std::optional<LinkingWitness> witness;  // empty: none up to depth
};

// First h (in enumeration order, skipping the stabilizer of g's axis) whose
// image of g's endpoint pair links the pair itself.
LinkingResult find_linking_witness(const MobiusElement& g, std::span<const MobiusElement> elements, int depth,
                                   const Tolerance& tol = {});
LinkingResult find_linking_witness(const MobiusElement& g, const GroupSpec& group, int depth,
                                   const EnumerationOptions& options = {});

struct SearchDepths {
  int lozenge = 8;
  int linking = 10;
  int oracle = 8;
};

struct OracleResult {
  int depth = 0;
  int crossing_classes = 0;  // conjugate axes crossing the axis, modulo <g>
  int lower_bound = 0;       // on the geometric self-intersection number
};

struct CocylReport {
  Word word;
  SearchDepths depths;
  int partner_range = 0;
  OrbitPoint base;
  SimplicityCertificate simple_verdict;  // for B(o, eta(o))
  LinkingResult linking;
  OracleResult oracle;
  std::vector<int> partner_indices;  // n with B(o, eta^n(o)) free of witnesses
  std::vector<SimplicityCertificate> partner_certificates;  // index n-1

  bool non_simple() const { return simple_verdict.witness.has_value(); }
  // Every n in range has a witness: a trivial co-cylindrical class at the tested depth.
  bool trivial_class_evidence() const { return partner_indices.empty() && linking.witness.has_value(); }
};

// Runs the three criteria and the partner search; throws InconsistentVerdicts
// when criteria searched at comparable depths disagree.
CocylReport cocyl_report(const MobiusElement& g, ElementCache& cache, const SearchDepths& depths, int partner_range);

// The pairwise cross-check used by cocyl_report, exposed for testing.
// Each verdict is (found_witness, depth).
void check_consistency(std::pair<bool, int> lozenge, std::pair<bool, int> linking, std::pair<bool, int> oracle);

struct ShiftCheck {
  bool ok = false;
  bool sets_agree = false;
  bool witnesses_transported = false;
  std::vector<std::vector<int>> partner_sets;  // for bases eta^0, eta^1, eta^2 of o
};

// Carries a witness for the chain based at o to the chain based at eta^shift(o).
using WitnessTransport = std::function<NonSimpleWitness(const NonSimpleWitness&, int shift)>;
NonSimpleWitness eta_transport(const NonSimpleWitness& w, int shift);

// Partner sets of o, eta(o) and eta^2(o), plus the transport of every witness
// found for o, each re-verified against the shifted chain.
ShiftCheck cardinality_shift_check(const MobiusElement& g, ElementCache& cache, int depth, int partner_range,
                                   const WitnessTransport& transport = eta_transport);
bool partner_sets_agree(std::span<const std::vector<int>> sets);

}  // namespace lozenge

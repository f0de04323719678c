#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lozenge/mobius.hpp"

namespace lozenge {

struct GroupSpec {
  std::string name;
  std::vector<MobiusElement> generators;
  std::string model = "upper half-plane, boundary charted by the Cayley transform";

  int rank() const { return static_cast<int>(generators.size()); }
};

// Validates and normalizes explicit generator matrices (det within
// det_tolerance of 1, no identity generator).
GroupSpec make_group(std::string name, std::span<const MobiusElement::Matrix> matrices,
                     double det_tolerance = 1e-6, const Tolerance& tol = {});

GroupSpec modular_torus();
GroupSpec octagon_genus2();
// "modular-torus" or "octagon-genus2"; throws InvalidArgument otherwise.
GroupSpec builtin_group(std::string_view name);
std::vector<std::string> builtin_group_names();

// Stable hex digest of the generator matrices; keys the enumeration cache.
std::string fingerprint(const GroupSpec& group);

MobiusElement element_from_word(const GroupSpec& group, const Word& word);
MobiusElement element_from_word(const GroupSpec& group, std::string_view word);

struct EnumerationOptions {
  std::uint64_t cap = 1'000'000;
  Tolerance tol;
};

// Number of reduced words of length <= depth in a free group of this rank.
std::uint64_t projected_count(int rank, int depth);

// All freely reduced words of length <= depth, ordered by length and then
// lexicographically (a < A < b < B ...), keeping the first representative of
// each projective matrix class. Throws DepthTooLarge above the cap.
std::vector<MobiusElement> enumerate_elements(const GroupSpec& group, int depth,
                                              const EnumerationOptions& options = {});

// Enumerates once at the deepest requested depth and serves shallower depths
// as prefixes (the canonical order makes every depth a prefix of the next).
class ElementCache {
 public:
  using Provider = std::function<std::vector<MobiusElement>(const GroupSpec&, int, const EnumerationOptions&)>;

  explicit ElementCache(GroupSpec group, EnumerationOptions options = {}, Provider provider = {});

  const GroupSpec& group() const { return group_; }
  const EnumerationOptions& options() const { return options_; }
  const Tolerance& tolerance() const { return options_.tol; }
  std::span<const MobiusElement> elements(int depth);

 private:
  GroupSpec group_;
  EnumerationOptions options_;
  Provider provider_;
  int depth_ = -1;
  std::vector<MobiusElement> elements_;
  std::vector<std::size_t> prefix_end_;  // prefix_end_[d] = count with word length <= d
};

}  // namespace lozenge

#include "lozenge/group.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <unordered_map>

#include "lozenge/errors.hpp"

namespace lozenge {

GroupSpec make_group(std::string name, std::span<const MobiusElement::Matrix> matrices,
                     double det_tolerance, const Tolerance& tol) {
  if (matrices.empty()) fail(ErrorCode::ValidationError, "group needs at least one generator");
  if (matrices.size() > 26) fail(ErrorCode::ValidationError, "at most 26 generators are supported");
  GroupSpec group;
  group.name = std::move(name);
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const auto& m = matrices[i];
    double det = m[0] * m[3] - m[1] * m[2];
    if (!(std::abs(det - 1.0) <= det_tolerance))
      fail(ErrorCode::ValidationError, "generator " + std::to_string(i + 1) + " is not unimodular (det = " +
                                           std::to_string(det) + ")");
    auto g = MobiusElement::from_matrix(m, {static_cast<int>(i) + 1});
    if (classify(g, tol).kind == Kind::Identity)
      fail(ErrorCode::ValidationError, "generator " + std::to_string(i + 1) + " is the identity");
    group.generators.push_back(std::move(g));
  }
  return group;
}

GroupSpec modular_torus() {
  const MobiusElement::Matrix gens[] = {{1.0, 1.0, 1.0, 2.0}, {1.0, -1.0, -1.0, 2.0}};
  return make_group("modular-torus", gens);
}

GroupSpec octagon_genus2() {
  // Side pairings of the regular octagon with angles pi/4: conjugates by
  // rotations of the translation with trace 2(1 + sqrt 2).
  const double alpha = 1.0 + std::numbers::sqrt2;
  const double beta = std::sqrt(2.0 + 2.0 * std::numbers::sqrt2);
  std::vector<MobiusElement::Matrix> gens;
  for (int k = 0; k < 4; ++k) {
    double phi = k * std::numbers::pi / 4.0;
    double c = std::cos(phi), s = std::sin(phi);
    gens.push_back({alpha + beta * c, -beta * s, -beta * s, alpha - beta * c});
  }
  return make_group("octagon-genus2", gens);
}

std::vector<std::string> builtin_group_names() { return {"modular-torus", "octagon-genus2"}; }

GroupSpec builtin_group(std::string_view name) {
  if (name == "modular-torus") return modular_torus();
  if (name == "octagon-genus2") return octagon_genus2();
  fail(ErrorCode::InvalidArgument, "unknown group '" + std::string(name) + "'");
}

std::string fingerprint(const GroupSpec& group) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const char* s) {
    for (; *s; ++s) {
      h ^= static_cast<unsigned char>(*s);
      h *= 1099511628211ull;
    }
  };
  char buf[64];
  for (const auto& g : group.generators) {
    for (double x : g.matrix()) {
      std::snprintf(buf, sizeof buf, "%.17g;", x);
      mix(buf);
    }
    mix("|");
  }
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

MobiusElement letter_element(const GroupSpec& group, int letter) {
  const auto& g = group.generators.at(static_cast<std::size_t>(std::abs(letter) - 1));
  return letter > 0 ? g : g.inverse();
}

}  // namespace

MobiusElement element_from_word(const GroupSpec& group, const Word& word) {
  MobiusElement acc;
  for (int letter : reduce_word(word)) {
    if (letter == 0 || std::abs(letter) > group.rank())
      fail(ErrorCode::UnknownGenerator, "generator index " + std::to_string(letter) + " out of range");
    acc = compose(acc, letter_element(group, letter));
  }
  return acc;
}

MobiusElement element_from_word(const GroupSpec& group, std::string_view word) {
  return element_from_word(group, parse_word(word, group.rank()));
}

std::uint64_t projected_count(int rank, int depth) {
  if (depth <= 0 || rank <= 0) return 1;
  const std::uint64_t branching = 2ull * static_cast<std::uint64_t>(rank) - 1;
  std::uint64_t total = 1;
  std::uint64_t level = 2ull * static_cast<std::uint64_t>(rank);
  for (int len = 1; len <= depth; ++len) {
    total += level;
    if (total > (1ull << 60)) return total;
    level *= branching;
  }
  return total;
}

namespace {

// Buckets elements by a sign-invariant coarse key; neighbours are probed so a
// pair straddling a bucket boundary is still compared.
class ProjectiveIndex {
 public:
  explicit ProjectiveIndex(double eps) : eps_(eps) {}

  bool insert_if_new(const MobiusElement& g, std::size_t id, const std::vector<MobiusElement>& store) {
    long long key = key_of(g);
    for (long long k = key - 1; k <= key + 1; ++k) {
      auto it = buckets_.find(k);
      if (it == buckets_.end()) continue;
      for (std::size_t j : it->second)
        if (projective_distance(store[j], g) < eps_) return false;
    }
    buckets_[key].push_back(id);
    return true;
  }

 private:
  static long long key_of(const MobiusElement& g) {
    double sum = 0.0;
    for (double x : g.matrix()) sum += std::abs(x);
    return std::llround(sum * 1e6);
  }

  double eps_;
  std::unordered_map<long long, std::vector<std::size_t>> buckets_;
};

}  // namespace

std::vector<MobiusElement> enumerate_elements(const GroupSpec& group, int depth,
                                              const EnumerationOptions& options) {
  if (depth < 0) fail(ErrorCode::InvalidArgument, "depth must be non-negative");
  std::uint64_t projected = projected_count(group.rank(), depth);
  if (projected > options.cap)
    fail(ErrorCode::DepthTooLarge, "depth " + std::to_string(depth) + " projects " + std::to_string(projected) +
                                       " words, above the cap of " + std::to_string(options.cap));

  std::vector<int> letters;
  for (int i = 1; i <= group.rank(); ++i) {
    letters.push_back(i);
    letters.push_back(-i);
  }
  std::vector<MobiusElement> letter_elems;
  for (int letter : letters) letter_elems.push_back(letter_element(group, letter));

  std::vector<MobiusElement> out;
  out.reserve(static_cast<std::size_t>(projected));
  ProjectiveIndex index(options.tol.eps);
  out.emplace_back();
  index.insert_if_new(out.back(), 0, out);

  std::vector<MobiusElement> frontier{MobiusElement{}};
  for (int len = 1; len <= depth; ++len) {
    std::vector<MobiusElement> next;
    next.reserve(frontier.size() * letters.size());
    for (const auto& parent : frontier) {
      int last = parent.word().empty() ? 0 : parent.word().back();
      for (std::size_t li = 0; li < letters.size(); ++li) {
        if (letters[li] == -last) continue;
        next.push_back(compose(parent, letter_elems[li]));
      }
    }
    for (const auto& g : next) {
      if (index.insert_if_new(g, out.size(), out)) out.push_back(g);
    }
    frontier = std::move(next);
  }
  return out;
}

ElementCache::ElementCache(GroupSpec group, EnumerationOptions options, Provider provider)
    : group_(std::move(group)), options_(options), provider_(std::move(provider)) {}

std::span<const MobiusElement> ElementCache::elements(int depth) {
  if (depth < 0) fail(ErrorCode::InvalidArgument, "depth must be non-negative");
  if (depth > depth_) {
    elements_ = provider_ ? provider_(group_, depth, options_) : enumerate_elements(group_, depth, options_);
    depth_ = depth;
    prefix_end_.assign(static_cast<std::size_t>(depth) + 1, 0);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      auto len = elements_[i].word().size();
      for (std::size_t d = len; d <= static_cast<std::size_t>(depth); ++d) prefix_end_[d] = i + 1;
    }
  }
  return std::span<const MobiusElement>(elements_.data(), prefix_end_[static_cast<std::size_t>(depth)]);
}

}  // namespace lozenge

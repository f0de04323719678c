#pragma once

#include <array>
#include <random>
#include <string_view>

#include "lozenge/orbit_space.hpp"

namespace lozenge::fixtures {

struct CorpusWord {
  std::string_view word;
  bool simple;
  std::string_view first_witness;  // shortest conjugator linking the axis, in enumeration order
};

// Verdicts frozen from tests/oracle/axis_oracle.py (exact integer matrices,
// 50-digit fixed points), searched to depth 6.
inline constexpr std::array<CorpusWord, 20> kCorpus{{
    {"a", true, ""},          {"b", true, ""},          {"ab", true, ""},          {"aB", true, ""},
    {"aab", true, ""},        {"aaB", true, ""},        {"abb", true, ""},         {"aBB", true, ""},
    {"aaab", true, ""},       {"aabab", true, ""},      {"aaBaB", true, ""},       {"abab", true, ""},
    {"aabb", false, "ab"},    {"aaBB", false, "aB"},    {"aabbb", false, "ab"},    {"aaabb", false, "ab"},
    {"abaB", false, "a"},     {"aabAB", false, "a"},    {"aabaB", false, "a"},     {"aaabbb", false, "ab"},
}};

inline std::mt19937_64 seeded(std::uint64_t salt) { return std::mt19937_64(0x5eed0000ULL + salt); }

// A uniformly random point of the strip s - 1 < u < s with s in [-3, 3).
inline OrbitPoint random_orbit_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> s_dist(-3.0, 3.0);
  std::uniform_real_distribution<double> gap(1e-3, 1.0 - 1e-3);
  const double s = s_dist(rng);
  return {s - gap(rng), s};
}

}  // namespace lozenge::fixtures

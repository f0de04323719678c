#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lozenge/mobius.hpp"
#include "lozenge/orbit_space.hpp"

namespace lozenge {

inline constexpr const char* kReportSchema = "lozenge-report 1";

// Shortest round-trip-stable text for a double: %.12g, with -0 printed as 0
// and non-finite values as inf, -inf or nan.
std::string format_real(double x);
std::string format_matrix(const MobiusElement::Matrix& m);
std::string format_point(const OrbitPoint& o);
std::string format_pair(const PointPair& p);

// Line-oriented "key: value" text under a schema header. Keys keep insertion
// order; values never contain newlines.
class Report {
 public:
  explicit Report(std::string command);

  void add(std::string key, std::string value);
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  void add(std::string key, double value) { add(std::move(key), format_real(value)); }
  void add(std::string key, int value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, long value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, std::uint64_t value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  // The value of the first entry with this key, or empty.
  std::string value(const std::string& key) const;
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace lozenge

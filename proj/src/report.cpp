#include "lozenge/report.hpp"

#include <cmath>
#include <cstdio>

namespace lozenge {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

std::string format_matrix(const MobiusElement::Matrix& m) {
  return "[[" + format_real(m[0]) + ", " + format_real(m[1]) + "], [" + format_real(m[2]) + ", " +
         format_real(m[3]) + "]]";
}

std::string format_point(const OrbitPoint& o) { return "(" + format_real(o.u) + ", " + format_real(o.s) + ")"; }

std::string format_pair(const PointPair& p) {
  return "(" + format_real(p.a_plus.angle()) + ", " + format_real(p.a_minus.angle()) + ")";
}

Report::Report(std::string command) { add("command", std::move(command)); }

void Report::add(std::string key, std::string value) {
  for (auto& c : value)
    if (c == '\n' || c == '\r') c = ' ';
  entries_.emplace_back(std::move(key), std::move(value));
}

std::string Report::value(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return {};
}

std::string Report::str() const {
  std::string out = kReportSchema;
  out += '\n';
  for (const auto& [k, v] : entries_) {
    out += k;
    out += ": ";
    out += v;
    out += '\n';
  }
  return out;
}

}  // namespace lozenge

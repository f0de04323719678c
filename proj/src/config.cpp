#include "lozenge/config.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "lozenge/errors.hpp"

namespace lozenge {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& msg) { fail(ErrorCode::ValidationError, msg); }

void check_keys(const json& object, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) invalid("unknown key '" + key + "' in " + where);
  }
}

int read_int(const json& value, const std::string& key, int lo, int hi) {
  if (!value.is_number_integer()) invalid("'" + key + "' must be an integer");
  const auto v = value.get<long long>();
  if (v < lo || v > hi) invalid("'" + key + "' must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

GroupSpec read_group(const json& value, const Tolerance& tol) {
  if (value.is_string()) {
    const auto name = value.get<std::string>();
    for (const auto& known : builtin_group_names())
      if (known == name) return builtin_group(name);
    invalid("unknown group '" + name + "'");
  }
  if (!value.is_object()) invalid("'group' must be a name or an object");
  check_keys(value, {"name", "generators"}, "group");
  std::string name = "custom";
  if (value.contains("name")) {
    if (!value["name"].is_string()) invalid("'group.name' must be a string");
    name = value["name"].get<std::string>();
  }
  if (!value.contains("generators") || !value["generators"].is_array() || value["generators"].empty())
    invalid("'group.generators' must be a non-empty array of 2x2 matrices");
  std::vector<MobiusElement::Matrix> matrices;
  for (const auto& g : value["generators"]) {
    json flat = g;
    if (g.is_array() && g.size() == 2 && g[0].is_array() && g[1].is_array()) flat = json::array({g[0][0], g[0][1], g[1][0], g[1][1]});
    if (!flat.is_array() || flat.size() != 4) invalid("each generator must be [a, b, c, d] or [[a, b], [c, d]]");
    MobiusElement::Matrix m{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (!flat[i].is_number()) invalid("generator entries must be numbers");
      m[i] = flat[i].get<double>();
    }
    matrices.push_back(m);
  }
  return make_group(name, matrices, 1e-6, tol);
}

}  // namespace

void validate_depths(const Config& config) {
  for (int d : {config.depths.lozenge, config.depths.linking, config.depths.oracle}) {
    if (d < 0) invalid("depths must be non-negative");
    if (projected_count(config.group.rank(), d) > config.cap)
      invalid("depth " + std::to_string(d) + " enumerates " +
              std::to_string(projected_count(config.group.rank(), d)) + " words, above the cap of " +
              std::to_string(config.cap));
  }
}

Config parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // byte is one past the offending character
    std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    offset = std::min(offset, text.size());
    int line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                    std::string(e.what()));
  }
  if (!doc.is_object()) invalid("configuration must be a JSON object");
  check_keys(doc, {"group", "depth", "partner_range", "chain_length", "tolerance", "render"}, "configuration");

  Config config;
  if (doc.contains("tolerance")) {
    const auto& t = doc["tolerance"];
    if (!t.is_number() || !(t.get<double>() > 0.0) || t.get<double>() > 1e-3)
      invalid("'tolerance' must be a number in (0, 1e-3]");
    config.tol.eps = t.get<double>();
  }
  if (doc.contains("group")) config.group = read_group(doc["group"], config.tol);
  if (doc.contains("depth")) {
    const auto& d = doc["depth"];
    if (d.is_number_integer()) {
      const int v = read_int(d, "depth", 0, 64);
      config.depths = {v, v, v};
    } else if (d.is_object()) {
      check_keys(d, {"lozenge", "linking", "oracle"}, "depth");
      if (d.contains("lozenge")) config.depths.lozenge = read_int(d["lozenge"], "depth.lozenge", 0, 64);
      if (d.contains("linking")) config.depths.linking = read_int(d["linking"], "depth.linking", 0, 64);
      if (d.contains("oracle")) config.depths.oracle = read_int(d["oracle"], "depth.oracle", 0, 64);
    } else {
      invalid("'depth' must be an integer or an object");
    }
  }
  if (doc.contains("partner_range")) config.partner_range = read_int(doc["partner_range"], "partner_range", 0, 64);
  if (doc.contains("chain_length")) config.chain_length = read_int(doc["chain_length"], "chain_length", 1, 64);
  if (doc.contains("render")) {
    const auto& r = doc["render"];
    if (!r.is_object()) invalid("'render' must be an object");
    check_keys(r, {"width", "height", "samples"}, "render");
    if (r.contains("width")) config.render.width = read_int(r["width"], "render.width", 16, 16384);
    if (r.contains("height")) config.render.height = read_int(r["height"], "render.height", 16, 16384);
    if (r.contains("samples")) config.render.samples = read_int(r["samples"], "render.samples", 0, 1 << 20);
  }
  validate_depths(config);
  return config;
}

Config load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot read configuration file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace lozenge

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lozenge/cocylinder.hpp"
#include "lozenge/group.hpp"

namespace lozenge {

struct RenderOptions {
  int width = 720;
  int height = 720;
  int samples = 0;  // sign-profile samples; 0 selects the depth-scaled default
};

struct Config {
  GroupSpec group = modular_torus();
  SearchDepths depths;
  int partner_range = 3;
  int chain_length = 4;
  Tolerance tol;
  RenderOptions render;
  std::uint64_t cap = 1'000'000;
};

// Parses a JSON document:
//   { "group": "modular-torus" | { "name": ..., "generators": [[a, b, c, d], ...] },
//     "depth": n | { "lozenge": n, "linking": n, "oracle": n },
//     "partner_range": n, "chain_length": n, "tolerance": eps,
//     "render": { "width": w, "height": h, "samples": k } }
// Every key is optional. Throws ParseError (message carries line and column)
// and ValidationError (unknown keys, non-unimodular matrices, depths whose
// enumeration exceeds the cap, out-of-range numbers).
Config parse_config(std::string_view text);
// Throws IoError when the file cannot be read.
Config load_config(const std::string& path);

// Throws ValidationError when some depth projects above the cap.
void validate_depths(const Config& config);

}  // namespace lozenge

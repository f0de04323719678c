#pragma once

#include <string>
#include <vector>

#include "lozenge/config.hpp"
#include "lozenge/lozenge.hpp"

namespace lozenge {

struct LabeledPoint {
  std::string label;
  OrbitPoint point;
};

// What a figure of the strip shows: a chain of lozenges with its corners and
// any witness points (translated corners found inside the chain).
struct Scene {
  std::string title;
  std::vector<Lozenge> lozenges;
  std::vector<LabeledPoint> corners;
  std::vector<LabeledPoint> witnesses;
};

Scene chain_scene(const std::string& title, const Chain& chain);

// SVG 1.1 of the strip in (s, u) axes: s runs right, u runs up, the strip
// s - 1 < u < s is shaded, lozenges are drawn as open rectangles. Every
// coordinate is printed with 6 decimals.
std::string render_svg(const Scene& scene, const RenderOptions& options = {});

// RFC 4180 CSV (CRLF line ends, quoted fields where needed) with one row per
// lozenge, corner and witness.
std::string render_csv(const Scene& scene);

// Quotes a CSV field when it contains a comma, quote, CR or LF.
std::string csv_field(const std::string& field);

}  // namespace lozenge

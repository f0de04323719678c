#include "lozenge/render.hpp"

#include <algorithm>
#include <cstdio>

namespace lozenge {

namespace {

std::string fixed6(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double s0, s1, u0, u1;
  double width, height, margin;

  double x(double s) const { return margin + (s - s0) / (s1 - s0) * (width - 2.0 * margin); }
  double y(double u) const { return height - margin - (u - u0) / (u1 - u0) * (height - 2.0 * margin); }
};

Frame frame_for(const Scene& scene, const RenderOptions& options) {
  double s0 = 0.0, s1 = 1.0, u0 = -1.0, u1 = 1.0;
  bool first = true;
  auto include = [&](double s, double u) {
    if (first) {
      s0 = s1 = s;
      u0 = u1 = u;
      first = false;
    }
    s0 = std::min(s0, s);
    s1 = std::max(s1, s);
    u0 = std::min(u0, u);
    u1 = std::max(u1, u);
  };
  for (const auto& l : scene.lozenges) {
    include(l.s_range().lo, l.u_range().lo);
    include(l.s_range().hi, l.u_range().hi);
  }
  for (const auto& p : scene.corners) include(p.point.s, p.point.u);
  for (const auto& p : scene.witnesses) include(p.point.s, p.point.u);
  const double pad = 0.25;
  // equal units on both axes keep lozenges undistorted
  const double lo = std::min(s0, u0 + 0.5) - pad;
  const double hi = std::max(s1, u1 + 0.5) + pad;
  return {lo, hi, lo - 0.5, hi - 0.5, static_cast<double>(options.width), static_cast<double>(options.height), 40.0};
}

}  // namespace

Scene chain_scene(const std::string& title, const Chain& chain) {
  Scene scene;
  scene.title = title;
  for (int i = chain.lo(); i < chain.hi(); ++i) scene.lozenges.push_back(chain.lozenge(i));
  for (int i = chain.lo(); i <= chain.hi(); ++i)
    scene.corners.push_back({"eta^" + std::to_string(i), chain.corner(i)});
  return scene;
}

std::string render_svg(const Scene& scene, const RenderOptions& options) {
  const Frame f = frame_for(scene, options);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(options.width) +
         "\" height=\"" + std::to_string(options.height) + "\" viewBox=\"0 0 " + std::to_string(options.width) + " " +
         std::to_string(options.height) + "\">\n";
  out += "<title>" + xml_escape(scene.title) + "</title>\n";
  out += "<defs><clipPath id=\"frame\"><rect x=\"" + fixed6(f.margin) + "\" y=\"" + fixed6(f.margin) +
         "\" width=\"" + fixed6(f.width - 2.0 * f.margin) + "\" height=\"" + fixed6(f.height - 2.0 * f.margin) +
         "\"/></clipPath></defs>\n";
  out += "<rect x=\"0.000000\" y=\"0.000000\" width=\"" + fixed6(f.width) + "\" height=\"" + fixed6(f.height) +
         "\" fill=\"white\"/>\n";

  // strip s - 1 < u < s over the visible s-range
  out += "<g clip-path=\"url(#frame)\">\n";
  out += "<polygon class=\"strip\" fill=\"#e8eef7\" stroke=\"#7a8ca8\" stroke-width=\"1\" points=\"";
  out += fixed6(f.x(f.s0)) + "," + fixed6(f.y(f.s0)) + " " + fixed6(f.x(f.s1)) + "," + fixed6(f.y(f.s1)) + " " +
         fixed6(f.x(f.s1)) + "," + fixed6(f.y(f.s1 - 1.0)) + " " + fixed6(f.x(f.s0)) + "," + fixed6(f.y(f.s0 - 1.0));
  out += "\"/>\n";
  for (std::size_t i = 0; i < scene.lozenges.size(); ++i) {
    const auto& l = scene.lozenges[i];
    const double x0 = f.x(l.s_range().lo), x1 = f.x(l.s_range().hi);
    const double y0 = f.y(l.u_range().hi), y1 = f.y(l.u_range().lo);
    out += "<rect class=\"lozenge\" data-index=\"" + std::to_string(i) + "\" x=\"" + fixed6(x0) + "\" y=\"" +
           fixed6(y0) + "\" width=\"" + fixed6(x1 - x0) + "\" height=\"" + fixed6(y1 - y0) +
           "\" fill=\"#f4c542\" fill-opacity=\"0.45\" stroke=\"#8a6d00\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& c : scene.corners)
    out += "<circle class=\"corner\" cx=\"" + fixed6(f.x(c.point.s)) + "\" cy=\"" + fixed6(f.y(c.point.u)) +
           "\" r=\"4.000000\" fill=\"#1f3b73\"><title>" + xml_escape(c.label) + "</title></circle>\n";
  for (const auto& w : scene.witnesses)
    out += "<circle class=\"witness\" cx=\"" + fixed6(f.x(w.point.s)) + "\" cy=\"" + fixed6(f.y(w.point.u)) +
           "\" r=\"5.000000\" fill=\"#c0392b\"><title>" + xml_escape(w.label) + "</title></circle>\n";
  out += "</g>\n";
  out += "<text x=\"" + fixed6(f.margin) + "\" y=\"" + fixed6(f.margin - 12.0) +
         "\" font-family=\"sans-serif\" font-size=\"14\">" + xml_escape(scene.title) + "</text>\n";
  out += "<text x=\"" + fixed6(f.width - f.margin) + "\" y=\"" + fixed6(f.height - 12.0) +
         "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">s</text>\n";
  out += "<text x=\"12.000000\" y=\"" + fixed6(f.margin) + "\" font-family=\"sans-serif\" font-size=\"12\">u</text>\n";
  out += "</svg>\n";
  return out;
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_csv(const Scene& scene) {
  std::string out = "kind,label,u,s,u_hi,s_hi\r\n";
  auto row = [&](const std::string& kind, const std::string& label, double u, double s, const std::string& uh,
                 const std::string& sh) {
    out += csv_field(kind) + "," + csv_field(label) + "," + fixed6(u) + "," + fixed6(s) + "," + uh + "," + sh + "\r\n";
  };
  for (std::size_t i = 0; i < scene.lozenges.size(); ++i) {
    const auto& l = scene.lozenges[i];
    row("lozenge", std::to_string(i), l.u_range().lo, l.s_range().lo, fixed6(l.u_range().hi), fixed6(l.s_range().hi));
  }
  for (const auto& c : scene.corners) row("corner", c.label, c.point.u, c.point.s, "", "");
  for (const auto& w : scene.witnesses) row("witness", w.label, w.point.u, w.point.s, "", "");
  return out;
}

}  // namespace lozenge

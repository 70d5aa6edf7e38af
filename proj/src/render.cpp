#include "pentaca/render.hpp"

#include <cstdio>

namespace pentaca {

DiskView make_view(int radius, int depth) {
  DiskView v;
  v.patch = build_patch(radius);
  v.corr = build_correspondence(v.patch, depth);
  return v;
}

const DiskView& default_view() {
  static const DiskView v = make_view(6, 5);
  return v;
}

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", x);
  std::string s = buf;
  if (s == "-0.00000") s = "0.00000";
  return s;
}

// svg y grows downwards
std::string pt(DiskPoint p) { return num(p.real()) + "," + num(-p.imag()); }

std::string escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '&') o += "&amp;";
    else if (c == '<') o += "&lt;";
    else if (c == '>') o += "&gt;";
    else if (c == '"') o += "&quot;";
    else o += c;
  }
  return o;
}

} // namespace

std::string render_configuration(const Configuration& cfg, const DiskView& view, const RenderStyle& style) {
  if (style.stroke_width <= 0) throw std::invalid_argument("stroke width must be positive");
  for (auto c : cfg.black)
    if (!view.corr.to_geo.count(c)) throw std::invalid_argument("black cell " + to_string(c) + " is outside the view");
  std::string o;
  o += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(style.pixels) + "\" height=\"" +
       std::to_string(style.pixels) + "\" viewBox=\"-1.02 -1.02 2.04 2.04\">\n";
  o += "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"" + escape(style.white_fill) + "\" stroke=\"#000000\" stroke-width=\"" +
       num(style.stroke_width) + "\"/>\n";
  o += "<g stroke=\"#000000\" stroke-width=\"" + num(style.stroke_width) + "\" stroke-linejoin=\"round\">\n";
  for (auto& t : view.patch.tiles) {
    auto& name = view.corr.to_coord[t.id];
    bool black = name && cfg.is_black(*name);
    std::string d = "M" + pt(t.vertices[0]);
    for (int i = 0; i < 5; ++i) {
      auto pts = geodesic_points(t.vertices[i], t.vertices[(i + 1) % 5], kEdgeSegments);
      for (size_t k = 1; k + (i == 4 ? 1 : 0) < pts.size(); ++k) d += " L" + pt(pts[k]);
    }
    d += " Z";
    o += "<path class=\"tile " + std::string(black ? "black" : "white") + "\"";
    if (name) o += " data-cell=\"" + to_string(*name) + "\"";
    o += " fill=\"" + escape(black ? style.black_fill : style.white_fill) + "\" d=\"" + d + "\"/>\n";
  }
  o += "</g>\n";
  if (style.labels) {
    o += "<g font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n";
    for (auto& [c, g] : view.corr.to_geo) {
      auto& t = view.patch.tiles[g];
      // shrink the font with the tile
      double size = 0.25 * std::abs(t.vertices[0] - t.center);
      if (size < 0.004) continue;
      bool black = cfg.is_black(c);
      o += "<text x=\"" + num(t.center.real()) + "\" y=\"" + num(-t.center.imag()) + "\" font-size=\"" + num(size) +
           "\" fill=\"" + (black ? "#ffffff" : "#000000") + "\">" + to_string(c) + "</text>\n";
    }
    o += "</g>\n";
  }
  o += "</svg>\n";
  return o;
}

std::vector<std::string> render_run(const Scenario& s, const RuleTable& rules, int steps, const RenderStyle& style,
                                    const DiskView& view) {
  std::vector<Configuration> frames;
  run(s, rules, steps, ScanMode::Sparse, &frames);
  std::vector<std::string> out;
  for (int k = 0; k < steps; ++k) out.push_back(render_configuration(frames[k], view, style));
  return out;
}

} // namespace pentaca

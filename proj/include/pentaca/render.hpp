#pragma once

#include <string>
#include <vector>

#include "pentaca/coords.hpp"
#include "pentaca/engine.hpp"
#include "pentaca/geometry.hpp"
#include "pentaca/scenario.hpp"

namespace pentaca {

struct RenderStyle {
  std::string black_fill = "#1a237e";
  std::string white_fill = "#ffffff";
  double stroke_width = 0.002; // disk units
  bool labels = false;
  int pixels = 800;
};

// A patch with its tiles named by coordinates.
struct DiskView {
  Patch patch;
  Correspondence corr;
};

DiskView make_view(int radius, int depth);
// Large enough for every built-in scenario.
const DiskView& default_view();

inline constexpr int kEdgeSegments = 16;

// Plain SVG, one closed path per tile; black tiles carry class "tile black".
std::string render_configuration(const Configuration& cfg, const DiskView& view, const RenderStyle& style = {});

// One document per step, frame k showing the configuration before update k.
std::vector<std::string> render_run(const Scenario& s, const RuleTable& rules, int steps,
                                    const RenderStyle& style = {}, const DiskView& view = default_view());

} // namespace pentaca

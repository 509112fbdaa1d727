#pragma once

#include <string>
#include <vector>

#include "surfwind/curve.hpp"
#include "surfwind/isometry.hpp"

namespace surfwind {

struct SvgPath {
  std::vector<Vec2> points;
  int color = 0;       // palette index
  double opacity = 1.0;
  double width = 1.0;  // multiple of the base stroke width
};

// Deterministic drawing of cover-space polylines: fixed canvas width,
// six-decimal coordinates, unit gridlines for euclidean scenes and the real
// axis for half-plane scenes.
std::string render_svg(const std::vector<SvgPath>& paths, Geometry geom,
                       double margin = 0.05);

SvgPath path_of(const RegularCurve& c, int color, double opacity = 1.0,
                double width = 1.0);

}  // namespace surfwind

#include "surfwind/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "surfwind/errors.hpp"

namespace surfwind {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};
constexpr int kPaletteSize = 8;
constexpr double kCanvasWidth = 800.0;

std::string num(double v) {
  char buf[64];
  if (v == 0.0) v = 0.0;  // write -0 as 0
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

SvgPath path_of(const RegularCurve& c, int color, double opacity, double width) {
  return SvgPath{c.pos, color, opacity, width};
}

std::string render_svg(const std::vector<SvgPath>& paths, Geometry geom,
                       double margin) {
  double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
  for (const SvgPath& p : paths)
    for (Vec2 v : p.points) {
      x0 = std::min(x0, v.x);
      y0 = std::min(y0, v.y);
      x1 = std::max(x1, v.x);
      y1 = std::max(y1, v.y);
    }
  if (x0 > x1) throw Error(ErrorCode::InvalidInput, "nothing to draw");

  double span = std::max({x1 - x0, y1 - y0, 1e-6});
  double pad = margin * span;
  x0 -= pad;
  y0 -= pad;
  x1 += pad;
  y1 += pad;
  double scale = kCanvasWidth / (x1 - x0);
  double height = (y1 - y0) * scale;
  auto px = [&](double x) { return (x - x0) * scale; };
  auto py = [&](double y) { return (y1 - y) * scale; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
         num(kCanvasWidth) + " " + num(height) + "\" width=\"" +
         num(kCanvasWidth) + "\" height=\"" + num(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  if (geom == Geometry::Euclidean) {
    for (double gx = std::ceil(x0); gx <= std::floor(x1) + 0.5; gx += 1.0)
      out += "<line x1=\"" + num(px(gx)) + "\" y1=\"" + num(py(y0)) +
             "\" x2=\"" + num(px(gx)) + "\" y2=\"" + num(py(y1)) +
             "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (double gy = std::ceil(y0); gy <= std::floor(y1) + 0.5; gy += 1.0)
      out += "<line x1=\"" + num(px(x0)) + "\" y1=\"" + num(py(gy)) +
             "\" x2=\"" + num(px(x1)) + "\" y2=\"" + num(py(gy)) +
             "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  } else if (y0 < 0.0 && y1 > 0.0) {
    out += "<line x1=\"" + num(px(x0)) + "\" y1=\"" + num(py(0.0)) +
           "\" x2=\"" + num(px(x1)) + "\" y2=\"" + num(py(0.0)) +
           "\" stroke=\"#888888\" stroke-width=\"1.5\"/>\n";
  }

  for (const SvgPath& p : paths) {
    if (p.points.size() < 2) continue;
    std::string d = "M " + num(px(p.points[0].x)) + " " + num(py(p.points[0].y));
    for (std::size_t k = 1; k < p.points.size(); ++k)
      d += " L " + num(px(p.points[k].x)) + " " + num(py(p.points[k].y));
    int ci = ((p.color % kPaletteSize) + kPaletteSize) % kPaletteSize;
    out += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + kPalette[ci] +
           "\" stroke-width=\"" + num(2.0 * p.width) + "\" stroke-opacity=\"" +
           num(p.opacity) + "\" stroke-linejoin=\"round\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace surfwind

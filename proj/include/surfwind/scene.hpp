#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "surfwind/lift.hpp"

namespace surfwind {

// Plain-data description of a surface and named curves on it, loadable from
// JSON. resolve() turns the description into lifted curves.

struct GeneratorSpec {
  std::string name;
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  bool conj = false;

  bool operator==(const GeneratorSpec&) const = default;
};

struct SurfaceSpec {
  std::string kind = "plane";  // plane, cylinder, torus, moebius, klein, hyperbolic
  std::vector<GeneratorSpec> generators;  // hyperbolic only
  bool free_group = true;

  bool operator==(const SurfaceSpec&) const = default;
};

struct KinkSpec {
  double at = 0.5;  // fraction of the loop parameter
  int sign = 1;
  double radius = 0.1;

  bool operator==(const KinkSpec&) const = default;
};

struct PointSpec {
  double x = 0.0, y = 0.0;

  Vec2 vec() const { return {x, y}; }
  bool operator==(const PointSpec&) const = default;
};

// type selects the construction:
//   circle          center, radius, turns, phase
//   figure_eight    center, scale
//   geodesic_loop   word, hint
//   kinked_loop     word, hint, kinks
//   horocycle_loop  word, start
//   cover_samples   points, closed, word
struct CurveSpec {
  std::string name;
  std::string type;
  PointSpec center;
  double radius = 1.0;
  int turns = 1;
  double phase = 0.0;
  double scale = 0.25;
  std::string word;
  std::optional<PointSpec> hint;
  std::optional<PointSpec> start;
  std::vector<KinkSpec> kinks;
  std::vector<PointSpec> points;
  bool closed = false;
  std::size_t samples = 0;  // 0 picks the construction default

  bool operator==(const CurveSpec&) const = default;
};

struct SceneDoc {
  SurfaceSpec surface;
  std::vector<CurveSpec> curves;

  bool operator==(const SceneDoc&) const = default;
};

SceneDoc scene_from_json(const nlohmann::json& j);
nlohmann::json scene_to_json(const SceneDoc& doc);
SceneDoc load_scene(const std::string& path);

SurfaceModel surface_from_spec(const SurfaceSpec& spec);
LiftedCurve resolve_curve(const SurfaceModel& s, const CurveSpec& spec,
                          const Tolerances& tol = default_tol());

struct ResolvedScene {
  SurfaceModel surface;
  std::vector<std::pair<std::string, LiftedCurve>> curves;  // document order
};

ResolvedScene resolve(const SceneDoc& doc, const Tolerances& tol = default_tol());
const LiftedCurve& find_curve(const ResolvedScene& scene, const std::string& name);

}  // namespace surfwind

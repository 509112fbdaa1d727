#include "surfwind/scene.hpp"

#include <fstream>

#include "surfwind/geodesic.hpp"

namespace surfwind {

namespace {

using nlohmann::json;

PointSpec point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorCode::InvalidInput, "point must be a [x, y] number pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json point_to_json(PointSpec p) { return json::array({p.x, p.y}); }

template <class T>
T field_or(const json& j, const char* key, T fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  return it->get<T>();
}

SurfaceSpec surface_spec_from_json(const json& j) {
  SurfaceSpec s;
  s.kind = field_or<std::string>(j, "kind", "plane");
  s.free_group = field_or<bool>(j, "free_group", true);
  if (auto it = j.find("generators"); it != j.end()) {
    for (const json& g : *it) {
      GeneratorSpec gen;
      gen.name = g.at("name").get<std::string>();
      const json& m = g.at("matrix");
      if (!m.is_array() || m.size() != 4)
        throw Error(ErrorCode::InvalidInput,
                    "generator matrix must be [a, b, c, d]");
      gen.a = m[0].get<double>();
      gen.b = m[1].get<double>();
      gen.c = m[2].get<double>();
      gen.d = m[3].get<double>();
      gen.conj = field_or<bool>(g, "conj", false);
      s.generators.push_back(gen);
    }
  }
  return s;
}

json surface_spec_to_json(const SurfaceSpec& s) {
  json j;
  j["kind"] = s.kind;
  if (s.kind == "hyperbolic") {
    j["free_group"] = s.free_group;
    json gens = json::array();
    for (const GeneratorSpec& g : s.generators) {
      json gj;
      gj["name"] = g.name;
      gj["matrix"] = json::array({g.a, g.b, g.c, g.d});
      gj["conj"] = g.conj;
      gens.push_back(gj);
    }
    j["generators"] = gens;
  }
  return j;
}

CurveSpec curve_spec_from_json(const json& j) {
  CurveSpec c;
  c.name = j.at("name").get<std::string>();
  c.type = j.at("type").get<std::string>();
  if (auto it = j.find("center"); it != j.end()) c.center = point_from_json(*it);
  c.radius = field_or<double>(j, "radius", 1.0);
  c.turns = field_or<int>(j, "turns", 1);
  c.phase = field_or<double>(j, "phase", 0.0);
  c.scale = field_or<double>(j, "scale", 0.25);
  c.word = field_or<std::string>(j, "word", "");
  if (auto it = j.find("hint"); it != j.end()) c.hint = point_from_json(*it);
  if (auto it = j.find("start"); it != j.end()) c.start = point_from_json(*it);
  if (auto it = j.find("kinks"); it != j.end()) {
    for (const json& k : *it) {
      KinkSpec kink;
      kink.at = k.at("at").get<double>();
      kink.sign = field_or<int>(k, "sign", 1);
      kink.radius = field_or<double>(k, "radius", 0.1);
      c.kinks.push_back(kink);
    }
  }
  if (auto it = j.find("points"); it != j.end())
    for (const json& p : *it) c.points.push_back(point_from_json(p));
  c.closed = field_or<bool>(j, "closed", false);
  c.samples = field_or<std::size_t>(j, "samples", 0);
  return c;
}

json curve_spec_to_json(const CurveSpec& c) {
  json j;
  j["name"] = c.name;
  j["type"] = c.type;
  if (c.samples != 0) j["samples"] = c.samples;
  if (!c.word.empty()) j["word"] = c.word;
  if (c.type == "circle") {
    j["center"] = point_to_json(c.center);
    j["radius"] = c.radius;
    if (c.turns != 1) j["turns"] = c.turns;
    if (c.phase != 0.0) j["phase"] = c.phase;
  } else if (c.type == "figure_eight") {
    j["center"] = point_to_json(c.center);
    j["scale"] = c.scale;
  } else if (c.type == "geodesic_loop" || c.type == "kinked_loop") {
    if (c.hint) j["hint"] = point_to_json(*c.hint);
    if (!c.kinks.empty()) {
      json ks = json::array();
      for (const KinkSpec& k : c.kinks) {
        json kj;
        kj["at"] = k.at;
        kj["sign"] = k.sign;
        kj["radius"] = k.radius;
        ks.push_back(kj);
      }
      j["kinks"] = ks;
    }
  } else if (c.type == "horocycle_loop") {
    if (c.start) j["start"] = point_to_json(*c.start);
  } else if (c.type == "cover_samples") {
    json ps = json::array();
    for (PointSpec p : c.points) ps.push_back(point_to_json(p));
    j["points"] = ps;
    j["closed"] = c.closed;
  }
  return j;
}

std::size_t n_or(std::size_t requested, std::size_t fallback) {
  return requested ? requested : fallback;
}

}  // namespace

SceneDoc scene_from_json(const json& j) {
  try {
    SceneDoc doc;
    if (auto it = j.find("surface"); it != j.end())
      doc.surface = surface_spec_from_json(*it);
    if (auto it = j.find("curves"); it != j.end())
      for (const json& c : *it) doc.curves.push_back(curve_spec_from_json(c));
    return doc;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed scene: ") + e.what());
  }
}

json scene_to_json(const SceneDoc& doc) {
  json j;
  j["surface"] = surface_spec_to_json(doc.surface);
  json cs = json::array();
  for (const CurveSpec& c : doc.curves) cs.push_back(curve_spec_to_json(c));
  j["curves"] = cs;
  return j;
}

SceneDoc load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read scene file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput,
                "scene file " + path + " is not valid JSON: " + e.what());
  }
  return scene_from_json(j);
}

SurfaceModel surface_from_spec(const SurfaceSpec& spec) {
  if (spec.kind == "plane") return make_plane();
  if (spec.kind == "cylinder") return make_cylinder();
  if (spec.kind == "torus") return make_torus();
  if (spec.kind == "moebius") return make_moebius();
  if (spec.kind == "klein") return make_klein();
  if (spec.kind == "hyperbolic") {
    std::vector<std::pair<std::string, Isometry>> gens;
    for (const GeneratorSpec& g : spec.generators)
      gens.emplace_back(g.name, mobius_isometry(g.a, g.b, g.c, g.d, g.conj));
    return make_hyperbolic(std::move(gens), spec.free_group);
  }
  throw Error(ErrorCode::InvalidInput, "unknown surface kind " + spec.kind);
}

LiftedCurve resolve_curve(const SurfaceModel& s, const CurveSpec& spec,
                          const Tolerances& tol) {
  GroupWord w = parse_word(spec.word);
  Vec2 default_hint =
      s.geom == Geometry::HyperbolicUHP ? Vec2{0.0, 1.0} : Vec2{0.0, 0.0};

  if (spec.type == "circle") {
    RegularCurve c = make_circle(spec.center.vec(), spec.radius, spec.turns,
                                 spec.phase, n_or(spec.samples, 4096));
    return lift_given(s, std::move(c), w, tol);
  }
  if (spec.type == "figure_eight") {
    if (!w.empty())
      throw Error(ErrorCode::InvalidInput, "figure_eight curves are null class");
    return figure_eight_in_disc(s, spec.center.vec(), spec.scale,
                                n_or(spec.samples, 4096), tol);
  }
  if (spec.type == "geodesic_loop") {
    Vec2 hint = spec.hint ? spec.hint->vec() : default_hint;
    return closed_geodesic(s, w, hint, n_or(spec.samples, 1024), tol);
  }
  if (spec.type == "kinked_loop") {
    Vec2 hint = spec.hint ? spec.hint->vec() : default_hint;
    LiftedCurve base = closed_geodesic(s, w, hint, n_or(spec.samples, 1024), tol);
    RegularCurve c = base.cover;
    for (const KinkSpec& k : spec.kinks) {
      double u0 = c.u.front() + k.at * (c.u.back() - c.u.front());
      c = insert_kink(c, u0, k.sign, k.radius);
    }
    return lift_given(s, std::move(c), w, tol);
  }
  if (spec.type == "horocycle_loop") {
    Vec2 at = spec.start ? spec.start->vec() : Vec2{0.0, 1.0};
    return horocycle_loop(s, w, at.x, at.y, n_or(spec.samples, 1024), tol);
  }
  if (spec.type == "cover_samples") {
    if (spec.points.size() < 2)
      throw Error(ErrorCode::InvalidInput, "cover_samples needs at least 2 points");
    std::vector<double> u(spec.points.size());
    std::vector<Vec2> pos(spec.points.size());
    for (std::size_t k = 0; k < spec.points.size(); ++k) {
      u[k] = static_cast<double>(k);
      pos[k] = spec.points[k].vec();
    }
    RegularCurve c = curve_from_points(std::move(u), std::move(pos), spec.closed);
    return lift_given(s, std::move(c), w, tol);
  }
  throw Error(ErrorCode::InvalidInput, "unknown curve type " + spec.type);
}

ResolvedScene resolve(const SceneDoc& doc, const Tolerances& tol) {
  ResolvedScene out;
  out.surface = surface_from_spec(doc.surface);
  for (const CurveSpec& spec : doc.curves) {
    for (const auto& [name, lifted] : out.curves)
      if (name == spec.name)
        throw Error(ErrorCode::InvalidInput, "duplicate curve name " + spec.name);
    out.curves.emplace_back(spec.name, resolve_curve(out.surface, spec, tol));
  }
  return out;
}

const LiftedCurve& find_curve(const ResolvedScene& scene, const std::string& name) {
  for (const auto& [n, c] : scene.curves)
    if (n == name) return c;
  throw Error(ErrorCode::InvalidInput, "no curve named " + name);
}

}  // namespace surfwind

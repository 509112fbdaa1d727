#include "surfwind/surface.hpp"

#include <cmath>

namespace surfwind {

namespace {

Isometry reflection_y()  // (x, y) -> (x, -y)
{
  return euclidean_isometry(Mat2{1.0, 0.0, 0.0, -1.0}, Vec2{0.0, 0.0});
}

}  // namespace

SurfaceModel make_plane() { return SurfaceModel{}; }

SurfaceModel make_cylinder() {
  SurfaceModel s;
  s.kind = SurfaceKind::Cylinder;
  s.generators.emplace_back("a", euclidean_translation({1.0, 0.0}));
  return s;
}

SurfaceModel make_torus() {
  SurfaceModel s;
  s.kind = SurfaceKind::Torus;
  s.generators.emplace_back("a", euclidean_translation({1.0, 0.0}));
  s.generators.emplace_back("b", euclidean_translation({0.0, 1.0}));
  return s;
}

SurfaceModel make_moebius() {
  SurfaceModel s;
  s.kind = SurfaceKind::Moebius;
  Isometry g = compose(euclidean_translation({1.0, 0.0}), reflection_y());
  s.generators.emplace_back("g", g);
  return s;
}

SurfaceModel make_klein() {
  SurfaceModel s;
  s.kind = SurfaceKind::Klein;
  s.generators.emplace_back("a", euclidean_translation({1.0, 0.0}));
  Isometry b = compose(euclidean_translation({0.0, 1.0}),
                       euclidean_isometry(Mat2{-1.0, 0.0, 0.0, 1.0}, {0.0, 0.0}));
  s.generators.emplace_back("b", b);
  return s;
}

SurfaceModel make_hyperbolic(std::vector<std::pair<std::string, Isometry>> generators,
                             bool free_group) {
  SurfaceModel s;
  s.kind = SurfaceKind::HyperbolicCustom;
  s.geom = Geometry::HyperbolicUHP;
  for (const auto& [name, iso] : generators) {
    if (iso.geom != Geometry::HyperbolicUHP)
      throw Error(ErrorCode::GeometryMismatch,
                  "generator " + name + " is not a hyperbolic isometry");
  }
  s.generators = std::move(generators);
  s.free_group = free_group;
  return s;
}

bool orientable(const SurfaceModel& s) {
  for (const auto& [name, iso] : s.generators)
    if (orientation_sign(iso) < 0) return false;
  return true;
}

const Isometry& generator(const SurfaceModel& s, const std::string& name) {
  for (const auto& [n, iso] : s.generators)
    if (n == name) return iso;
  throw Error(ErrorCode::InvalidInput, "unknown generator: " + name);
}

bool in_domain(const SurfaceModel& s, Vec2 p) {
  if (s.geom == Geometry::HyperbolicUHP) return p.y > 0.0;
  if (s.kind == SurfaceKind::Moebius) return std::abs(p.y) < 1.0;
  return true;
}

Isometry word_isometry(const SurfaceModel& s, const GroupWord& w) {
  Isometry t = identity_isometry(s.geom);
  for (const Letter& l : w) {
    const Isometry& g = generator(s, l.gen);
    Isometry gp = l.exp > 0 ? g : invert(g);
    for (int k = 0; k < std::abs(l.exp); ++k) t = compose(t, gp);
  }
  return t;
}

int word_sign(const SurfaceModel& s, const GroupWord& w) {
  int sign = 1;
  for (const Letter& l : w)
    if (orientation_sign(generator(s, l.gen)) < 0 && (l.exp % 2 != 0)) sign = -sign;
  return sign;
}

std::pair<long long, long long> klein_normal_form(const GroupWord& w) {
  // a -> (1,0), b -> (0,1); (m1,n1)(m2,n2) = (m1 + (-1)^n1 m2, n1 + n2)
  long long m = 0, n = 0;
  auto fold = [&m, &n](long long dm, long long dn) {
    m += (n % 2 == 0) ? dm : -dm;
    n += dn;
  };
  for (const Letter& l : w) {
    long long step = l.exp > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(l.exp); ++k) {
      if (l.gen == "a") fold(step, 0);
      else if (l.gen == "b") fold(0, step);
      else throw Error(ErrorCode::InvalidInput, "klein words use generators a, b");
    }
  }
  return {m, n};
}

std::pair<long long, long long> klein_normal_form_of(const Isometry& t) {
  if (t.geom != Geometry::Euclidean)
    throw Error(ErrorCode::GeometryMismatch, "klein deck elements are euclidean");
  long long n = std::llround(t.shift.y);
  bool flipped = t.rot.a < 0.0;
  if (flipped != (((n % 2) + 2) % 2 == 1))
    throw Error(ErrorCode::InvalidInput, "isometry is not a klein deck element");
  long long m = std::llround(t.shift.x);
  return {m, n};
}

long long moebius_power(const GroupWord& w) {
  long long k = 0;
  for (const Letter& l : w) {
    if (l.gen != "g")
      throw Error(ErrorCode::InvalidInput, "moebius words use the generator g");
    k += l.exp;
  }
  return k;
}

long long moebius_power_of(const Isometry& t) {
  if (t.geom != Geometry::Euclidean)
    throw Error(ErrorCode::GeometryMismatch, "moebius deck elements are euclidean");
  return std::llround(t.shift.x);
}

}  // namespace surfwind

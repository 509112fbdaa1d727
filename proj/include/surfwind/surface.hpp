#pragma once

#include <string>
#include <utility>
#include <vector>

#include "surfwind/isometry.hpp"
#include "surfwind/word.hpp"

namespace surfwind {

enum class SurfaceKind { Plane, Cylinder, Torus, Moebius, Klein, HyperbolicCustom };

// Quotient of the plane or the upper half plane by a discrete group of
// isometries, described by named generators. The flat builtins use unit
// translations; the Moebius band lives on the open strip |y| < 1.
struct SurfaceModel {
  SurfaceKind kind = SurfaceKind::Plane;
  Geometry geom = Geometry::Euclidean;
  std::vector<std::pair<std::string, Isometry>> generators;
  // whether the deck group is free; only consulted for custom hyperbolic
  // models, where closed-surface groups are out of scope for reversibility
  bool free_group = true;
};

SurfaceModel make_plane();
SurfaceModel make_cylinder();
SurfaceModel make_torus();
SurfaceModel make_moebius();
SurfaceModel make_klein();
SurfaceModel make_hyperbolic(std::vector<std::pair<std::string, Isometry>> generators,
                             bool free_group = true);

bool orientable(const SurfaceModel& s);
const Isometry& generator(const SurfaceModel& s, const std::string& name);
bool in_domain(const SurfaceModel& s, Vec2 p);

Isometry word_isometry(const SurfaceModel& s, const GroupWord& w);
int word_sign(const SurfaceModel& s, const GroupWord& w);

// exponents (m, n) with the element equal to a^m b^n (Klein bottle),
// or the power of g (Moebius band)
std::pair<long long, long long> klein_normal_form(const GroupWord& w);
std::pair<long long, long long> klein_normal_form_of(const Isometry& t);
long long moebius_power(const GroupWord& w);
long long moebius_power_of(const Isometry& t);

}  // namespace surfwind

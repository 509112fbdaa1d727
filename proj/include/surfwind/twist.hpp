#pragma once

#include "surfwind/geom.hpp"

namespace surfwind {

// compactly supported rotation of the plane about a center: points inside
// the radius rotate by angle * bump(r), points outside stay fixed. Area
// preserving, so the jacobian is invertible for every angle, and the exact
// inverse is the twist with the opposite angle.
struct RadialTwist {
  Vec2 center;
  double radius = 1.0;
  double angle = 0.0;

  Vec2 map(Vec2 x) const;
  Mat2 jacobian(Vec2 x) const;
  RadialTwist inverse() const { return {center, radius, -angle}; }
};

}  // namespace surfwind

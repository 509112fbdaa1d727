#include "surfwind/twist.hpp"

#include <cmath>

namespace surfwind {

namespace {

// quartic bump: 1 at 0, 0 with flat contact at 1
double bump(double x) {
  if (x >= 1.0) return 0.0;
  double s = 1.0 - x * x;
  return s * s;
}

double bump_deriv(double x) {
  if (x >= 1.0) return 0.0;
  return -4.0 * x * (1.0 - x * x);
}

}  // namespace

Vec2 RadialTwist::map(Vec2 x) const {
  Vec2 v = x - center;
  double r = norm(v);
  if (r >= radius) return x;
  return center + rotation(angle * bump(r / radius)) * v;
}

Mat2 RadialTwist::jacobian(Vec2 x) const {
  Vec2 v = x - center;
  double r = norm(v);
  if (r >= radius) return Mat2{1.0, 0.0, 0.0, 1.0};
  double psi = angle * bump(r / radius);
  Mat2 rot = rotation(psi);
  if (r < 1e-14) return rot;
  // d/dx R(psi(|v|)) v = R(psi) (I + dpsi J v vhat^T)
  double dpsi = angle * bump_deriv(r / radius) / radius;
  Vec2 jv{-v.y, v.x};
  Vec2 vhat = v * (1.0 / r);
  Mat2 rank1{jv.x * vhat.x, jv.x * vhat.y, jv.y * vhat.x, jv.y * vhat.y};
  Mat2 inner{1.0 + dpsi * rank1.a, dpsi * rank1.b, dpsi * rank1.c,
             1.0 + dpsi * rank1.d};
  return rot * inner;
}

}  // namespace surfwind

#include "surfwind/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace surfwind {

namespace {

using Cplx = std::complex<double>;

constexpr double kStructTol = 1e-12;

Cplx mobius_arg(const Isometry& t, Vec2 p) {
  Cplx z = to_complex(p);
  return t.conj ? -std::conj(z) : z;
}

// matrix of nu*M*nu where nu(z) = -conj(z)
void twist_entries(double& a, double& b, double& c, double& d) {
  b = -b;
  c = -c;
  (void)a;
  (void)d;
}

double max_abs_diff(const Isometry& x, const Isometry& y, double sgn) {
  return std::max({std::abs(x.a - sgn * y.a), std::abs(x.b - sgn * y.b),
                   std::abs(x.c - sgn * y.c), std::abs(x.d - sgn * y.d)});
}

}  // namespace

Isometry identity_isometry(Geometry g) {
  Isometry t;
  t.geom = g;
  return t;
}

Isometry euclidean_isometry(const Mat2& rot, Vec2 shift) {
  double c1 = rot.a * rot.a + rot.c * rot.c;
  double c2 = rot.b * rot.b + rot.d * rot.d;
  double cr = rot.a * rot.b + rot.c * rot.d;
  if (std::abs(c1 - 1.0) > kStructTol || std::abs(c2 - 1.0) > kStructTol ||
      std::abs(cr) > kStructTol)
    throw Error(ErrorCode::InvalidInput, "euclidean rotation part not orthogonal");
  Isometry t;
  t.geom = Geometry::Euclidean;
  t.rot = rot;
  t.shift = shift;
  return t;
}

Isometry euclidean_translation(Vec2 shift) {
  return euclidean_isometry(Mat2{}, shift);
}

Isometry mobius_isometry(double a, double b, double c, double d, bool conj) {
  double dt = a * d - b * c;
  if (dt <= 0.0)
    throw Error(ErrorCode::InvalidInput, "moebius matrix needs positive determinant");
  if (std::abs(dt - 1.0) > 1e-6)
    throw Error(ErrorCode::InvalidInput, "moebius matrix determinant far from 1");
  double s = 1.0 / std::sqrt(dt);
  Isometry t;
  t.geom = Geometry::HyperbolicUHP;
  t.a = a * s;
  t.b = b * s;
  t.c = c * s;
  t.d = d * s;
  t.conj = conj;
  return t;
}

int orientation_sign(const Isometry& t) {
  if (t.geom == Geometry::Euclidean) return det(t.rot) > 0.0 ? 1 : -1;
  return t.conj ? -1 : 1;
}

Vec2 apply(const Isometry& t, Vec2 p) {
  if (t.geom == Geometry::Euclidean) return t.rot * p + t.shift;
  Cplx zeta = mobius_arg(t, p);
  Cplx w = (t.a * zeta + t.b) / (t.c * zeta + t.d);
  return from_complex(w);
}

Mat2 differential(const Isometry& t, Vec2 p) {
  if (t.geom == Geometry::Euclidean) return t.rot;
  Cplx zeta = mobius_arg(t, p);
  Cplx den = t.c * zeta + t.d;
  Cplx dw = 1.0 / (den * den);  // derivative in zeta, det 1
  Mat2 lin{dw.real(), -dw.imag(), dw.imag(), dw.real()};
  if (!t.conj) return lin;
  // d(-conj z) as a real map is diag(-1, 1)
  return lin * Mat2{-1.0, 0.0, 0.0, 1.0};
}

Isometry compose(const Isometry& t1, const Isometry& t2) {
  if (t1.geom != t2.geom)
    throw Error(ErrorCode::GeometryMismatch, "composing isometries of different geometries");
  if (t1.geom == Geometry::Euclidean) {
    Isometry t;
    t.geom = Geometry::Euclidean;
    t.rot = t1.rot * t2.rot;
    t.shift = t1.rot * t2.shift + t1.shift;
    return t;
  }
  double a = t2.a, b = t2.b, c = t2.c, d = t2.d;
  if (t1.conj) twist_entries(a, b, c, d);
  Isometry t;
  t.geom = Geometry::HyperbolicUHP;
  t.a = t1.a * a + t1.b * c;
  t.b = t1.a * b + t1.b * d;
  t.c = t1.c * a + t1.d * c;
  t.d = t1.c * b + t1.d * d;
  t.conj = t1.conj != t2.conj;
  return t;
}

Isometry invert(const Isometry& t) {
  if (t.geom == Geometry::Euclidean) {
    Mat2 rinv{t.rot.a, t.rot.c, t.rot.b, t.rot.d};  // orthogonal transpose
    Isometry s;
    s.geom = Geometry::Euclidean;
    s.rot = rinv;
    s.shift = -(rinv * t.shift);
    return s;
  }
  double a = t.d, b = -t.b, c = -t.c, d = t.a;
  if (t.conj) twist_entries(a, b, c, d);
  Isometry s;
  s.geom = Geometry::HyperbolicUHP;
  s.a = a;
  s.b = b;
  s.c = c;
  s.d = d;
  s.conj = t.conj;
  return s;
}

bool isometry_equal(const Isometry& t1, const Isometry& t2, double tol) {
  if (t1.geom != t2.geom) return false;
  if (t1.geom == Geometry::Euclidean) {
    double dr = std::max({std::abs(t1.rot.a - t2.rot.a), std::abs(t1.rot.b - t2.rot.b),
                          std::abs(t1.rot.c - t2.rot.c), std::abs(t1.rot.d - t2.rot.d)});
    double ds = std::max(std::abs(t1.shift.x - t2.shift.x),
                         std::abs(t1.shift.y - t2.shift.y));
    return dr <= tol && ds <= tol;
  }
  if (t1.conj != t2.conj) return false;
  return std::min(max_abs_diff(t1, t2, 1.0), max_abs_diff(t1, t2, -1.0)) <= tol;
}

bool is_identity(const Isometry& t, double tol) {
  return isometry_equal(t, identity_isometry(t.geom), tol);
}

Vec2 push_dir(const Isometry& t, Vec2 p, Vec2 e) {
  return normalized(differential(t, p) * e);
}

double hyperbolic_distance(Vec2 p, Vec2 q) {
  if (p.y <= 0.0 || q.y <= 0.0)
    throw Error(ErrorCode::OutOfDomain, "points must lie in the upper half plane");
  double arg = 1.0 + norm2(q - p) / (2.0 * p.y * q.y);
  return std::acosh(arg);
}

}  // namespace surfwind

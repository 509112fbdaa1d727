#pragma once

#include <cmath>
#include <complex>

namespace surfwind {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
};

inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double norm2(Vec2 v) { return v.x * v.x + v.y * v.y; }
inline Vec2 normalized(Vec2 v) { return v / norm(v); }
inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }  // rotate by +pi/2
inline double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

inline Vec2 from_complex(std::complex<double> z) { return {z.real(), z.imag()}; }
inline std::complex<double> to_complex(Vec2 v) { return {v.x, v.y}; }

// 2x2 real matrix, row major
struct Mat2 {
  double a = 1.0, b = 0.0;
  double c = 0.0, d = 1.0;

  Vec2 operator*(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

inline double det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

inline Mat2 rotation(double t) {
  double ct = std::cos(t), st = std::sin(t);
  return {ct, -st, st, ct};
}

inline Mat2 inverse(const Mat2& m) {
  double dt = det(m);
  return {m.d / dt, -m.b / dt, -m.c / dt, m.a / dt};
}

// reduce to (-pi, pi]
inline double principal_angle(double t) {
  t = std::remainder(t, kTwoPi);
  if (t <= -kPi) t += kTwoPi;
  return t;
}

// signed angle from u to v, in (-pi, pi]
inline double signed_angle(Vec2 u, Vec2 v) {
  return std::atan2(cross(u, v), dot(u, v));
}

}  // namespace surfwind

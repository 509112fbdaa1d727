#pragma once

// Reference values computed with plain loops and libm only, independent of
// the library's kernel pipeline, plus random curve generators for property
// tests.

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "surfwind/curve.hpp"

namespace oracle {

using surfwind::RegularCurve;
using surfwind::Vec2;

inline constexpr double kTau = 6.283185307179586476925287;

// sum of principal turning angles between consecutive sampled directions
inline double turning_index(const RegularCurve& c) {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    double a0 = std::atan2(c.vel[k].y, c.vel[k].x);
    double a1 = std::atan2(c.vel[k + 1].y, c.vel[k + 1].x);
    total += std::remainder(a1 - a0, kTau);
  }
  return total / kTau;
}

inline double start_angle(const RegularCurve& c) {
  double a = std::atan2(c.vel.front().y, c.vel.front().x);
  return a < 0.0 ? a + kTau : a;
}

// rotation companion (theta(b) + theta(a)) / tau for the given branch
inline double rotation_index(const RegularCurve& c, int branch = 0) {
  return 2.0 * start_angle(c) / kTau + turning_index(c) + 2.0 * branch;
}

inline double polyline_length(const RegularCurve& c) {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    total += std::hypot(c.pos[k + 1].x - c.pos[k].x, c.pos[k + 1].y - c.pos[k].y);
  return total;
}

// closed loop from a random trigonometric polynomial, rejection sampled so
// the speed stays well away from zero; largest radius scaled to size
inline RegularCurve random_loop(std::mt19937_64& rng, Vec2 center, double size,
                                int harmonics = 4, std::size_t n = 4096) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int attempt = 0; attempt < 400; ++attempt) {
    std::vector<Vec2> A(harmonics + 1), B(harmonics + 1);
    for (int k = 1; k <= harmonics; ++k) {
      double s = 1.0 / (k * k);
      A[k] = {u(rng) * s, u(rng) * s};
      B[k] = {u(rng) * s, u(rng) * s};
    }
    std::vector<Vec2> pos(n + 1), vel(n + 1);
    double maxr = 0.0, minv = 1e300, maxv = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      double t = kTau * static_cast<double>(i) / static_cast<double>(n);
      Vec2 p{0.0, 0.0}, v{0.0, 0.0};
      for (int k = 1; k <= harmonics; ++k) {
        double ck = std::cos(k * t), sk = std::sin(k * t);
        p += A[k] * ck + B[k] * sk;
        v += (B[k] * ck - A[k] * sk) * static_cast<double>(k);
      }
      pos[i] = p;
      vel[i] = v;
      maxr = std::max(maxr, std::hypot(p.x, p.y));
      double sp = std::hypot(v.x, v.y);
      minv = std::min(minv, sp);
      maxv = std::max(maxv, sp);
    }
    if (minv < 0.15 * maxv || maxr < 1e-6) continue;
    double scale = size / maxr;
    RegularCurve c;
    c.closed = true;
    c.u.resize(n + 1);
    c.pos.resize(n + 1);
    c.vel.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      c.u[i] = kTau * static_cast<double>(i) / static_cast<double>(n);
      c.pos[i] = center + pos[i] * scale;
      c.vel[i] = vel[i] * scale;
    }
    c.pos.back() = c.pos.front();
    c.vel.back() = c.vel.front();
    if (surfwind::validate_regular(c).ok) return c;
  }
  throw std::runtime_error("could not draw a regular random loop");
}

// open curve: trigonometric wiggle plus a linear drift
inline RegularCurve random_arc(std::mt19937_64& rng, Vec2 start, double size,
                               int harmonics = 4, std::size_t n = 2048) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int attempt = 0; attempt < 400; ++attempt) {
    Vec2 drift{u(rng) * 2.0 + 3.0, u(rng)};
    std::vector<Vec2> A(harmonics + 1), B(harmonics + 1);
    for (int k = 1; k <= harmonics; ++k) {
      double s = 1.0 / (k * k);
      A[k] = {u(rng) * s, u(rng) * s};
      B[k] = {u(rng) * s, u(rng) * s};
    }
    RegularCurve c;
    c.closed = false;
    c.u.resize(n + 1);
    c.pos.resize(n + 1);
    c.vel.resize(n + 1);
    double minv = 1e300, maxv = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      double t = kTau * static_cast<double>(i) / static_cast<double>(n);
      Vec2 p = drift * (t / kTau), v = drift * (1.0 / kTau);
      for (int k = 1; k <= harmonics; ++k) {
        double ck = std::cos(k * t), sk = std::sin(k * t);
        p += A[k] * ck + B[k] * sk;
        v += (B[k] * ck - A[k] * sk) * static_cast<double>(k);
      }
      c.u[i] = t;
      c.pos[i] = start + p * size;
      c.vel[i] = v * size;
      double sp = std::hypot(v.x, v.y);
      minv = std::min(minv, sp);
      maxv = std::max(maxv, sp);
    }
    if (minv < 0.15 * maxv) continue;
    if (surfwind::validate_regular(c).ok) return c;
  }
  throw std::runtime_error("could not draw a regular random arc");
}

}  // namespace oracle

#include "surfwind/curve.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "surfwind/kernels.hpp"

namespace surfwind {

namespace {

constexpr double kSpeedFloor = 1e-14;

std::vector<double> direction_angle_samples(const RegularCurve& c) {
  std::vector<double> a(c.size());
  kernels::direction_angles(c.vel, a);
  return a;
}

std::vector<double> turning_deltas(const RegularCurve& c) {
  std::vector<double> a = direction_angle_samples(c);
  std::vector<double> d(a.size() - 1);
  kernels::angle_deltas(a, d);
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (std::abs(d[k]) >= kPi / 2.0)
      throw Error(ErrorCode::UnwrapAmbiguous,
                  "direction jump of " + std::to_string(d[k]) + " rad at sample " +
                      std::to_string(k + 1));
  }
  return d;
}

std::size_t find_interval(const RegularCurve& c, double u) {
  assert(c.size() >= 2);
  auto it = std::upper_bound(c.u.begin(), c.u.end(), u);
  std::size_t k = static_cast<std::size_t>(it - c.u.begin());
  if (k == 0) return 0;
  if (k >= c.size()) return c.size() - 2;
  return k - 1;
}

}  // namespace

ValidationReport validate_regular(const RegularCurve& c, const Tolerances& tol) {
  ValidationReport r;
  auto flag = [&r](std::size_t idx, ErrorCode code, std::string msg) {
    r.ok = false;
    r.violations.push_back({idx, code, std::move(msg)});
  };

  if (c.size() < 2 || c.pos.size() != c.size() || c.vel.size() != c.size()) {
    flag(0, ErrorCode::InvalidInput, "need >= 2 aligned samples");
    return r;
  }
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    if (!(c.u[k] < c.u[k + 1])) {
      flag(k + 1, ErrorCode::InvalidInput, "parameters not strictly increasing");
      break;
    }
  }
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (norm(c.vel[k]) < kSpeedFloor) {
      flag(k, ErrorCode::InvalidInput, "vanishing velocity");
      break;
    }
  }
  if (!r.ok) return r;

  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    double step = signed_angle(c.vel[k], c.vel[k + 1]);
    if (std::abs(step) >= kPi / 2.0) {
      flag(k + 1, ErrorCode::SamplingTooCoarse,
           "adjacent directions differ by quarter turn or more");
      break;
    }
  }
  if (c.closed) {
    if (norm(c.pos.front() - c.pos.back()) > tol.pos)
      flag(c.size() - 1, ErrorCode::EndpointMismatch, "closed curve endpoints differ");
    if (std::abs(signed_angle(c.vel.front(), c.vel.back())) > tol.ang)
      flag(c.size() - 1, ErrorCode::InvalidInput, "closed curve end directions differ");
  }
  return r;
}

void require_valid(const RegularCurve& c, const Tolerances& tol) {
  ValidationReport r = validate_regular(c, tol);
  if (!r.ok) {
    const Violation& v = r.violations.front();
    throw Error(v.code, v.message + " (sample " + std::to_string(v.index) + ")");
  }
}

AngleFunction angle_function(const RegularCurve& c, int branch_offset) {
  std::vector<double> deltas = turning_deltas(c);
  double base = angle_of(c.vel.front());
  if (base < 0.0) base += kTwoPi;  // canonical representative in [0, 2pi)
  base += kTwoPi * branch_offset;
  AngleFunction a;
  a.u = c.u;
  a.theta.resize(c.size());
  kernels::unwrap_from_deltas(base, deltas, a.theta);
  return a;
}

double i_index(const RegularCurve& c) {
  std::vector<double> deltas = turning_deltas(c);
  return kernels::block_sum(deltas) / kTwoPi;
}

double j_index(const AngleFunction& a) {
  return (a.at_start() + a.at_end()) / kTwoPi;
}

double j_index(const RegularCurve& c, int branch_offset) {
  return j_index(angle_function(c, branch_offset));
}

IntegralityReport integrality_conditions(const RegularCurve& c,
                                         const Tolerances& tol) {
  AngleFunction a = angle_function(c);
  IntegralityReport rep;
  rep.i_value = (a.at_end() - a.at_start()) / kTwoPi;
  rep.j_value = j_index(a);

  double diff = principal_angle(a.at_end() - a.at_start());
  double sum = principal_angle(a.at_end() + a.at_start());
  rep.i_forced_integral = std::abs(diff) <= tol.ang;
  rep.i_forced_half = std::abs(std::abs(diff) - kPi) <= tol.ang;
  rep.j_forced_integral = std::abs(sum) <= tol.ang;
  rep.j_forced_half = std::abs(std::abs(sum) - kPi) <= tol.ang;
  rep.i_residual_int = std::abs(rep.i_value - std::round(rep.i_value));
  rep.j_residual_int = std::abs(rep.j_value - std::round(rep.j_value));
  return rep;
}

// --- plumbing ---------------------------------------------------------------

double curve_length(const RegularCurve& c) {
  std::vector<double> speed(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) speed[k] = norm(c.vel[k]);
  std::vector<double> acc(c.size());
  kernels::cumtrapz(c.u, speed, acc);
  return acc.back();
}

RegularCurve reverse_curve(const RegularCurve& c) {
  RegularCurve out;
  out.closed = c.closed;
  std::size_t n = c.size();
  out.u.resize(n);
  out.pos.resize(n);
  out.vel.resize(n);
  double ua = c.u.front(), ub = c.u.back();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t j = n - 1 - k;
    out.u[k] = ua + (ub - c.u[j]);
    out.pos[k] = c.pos[j];
    out.vel[k] = -c.vel[j];
  }
  return out;
}

RegularCurve concat(const RegularCurve& a, const RegularCurve& b,
                    const Tolerances& tol) {
  if (norm(a.pos.back() - b.pos.front()) > tol.pos)
    throw Error(ErrorCode::EndpointMismatch, "concat junction positions differ");
  if (std::abs(signed_angle(a.vel.back(), b.vel.front())) > tol.ang)
    throw Error(ErrorCode::EndpointMismatch, "concat junction directions differ");
  RegularCurve out = a;
  out.closed = false;
  double shift = a.u.back() - b.u.front();
  for (std::size_t k = 1; k < b.size(); ++k) {
    out.u.push_back(b.u[k] + shift);
    out.pos.push_back(b.pos[k]);
    out.vel.push_back(b.vel[k]);
  }
  return out;
}

RegularCurve translate(const RegularCurve& c, Vec2 d) {
  RegularCurve out = c;
  for (Vec2& p : out.pos) p += d;
  return out;
}

Vec2 eval_pos(const RegularCurve& c, double u) {
  std::size_t k = find_interval(c, u);
  double h = c.u[k + 1] - c.u[k];
  double t = (u - c.u[k]) / h;
  double t2 = t * t, t3 = t2 * t;
  Vec2 m0 = c.vel[k] * h, m1 = c.vel[k + 1] * h;
  return c.pos[k] * (2 * t3 - 3 * t2 + 1) + m0 * (t3 - 2 * t2 + t) +
         c.pos[k + 1] * (-2 * t3 + 3 * t2) + m1 * (t3 - t2);
}

Vec2 eval_vel(const RegularCurve& c, double u) {
  std::size_t k = find_interval(c, u);
  double h = c.u[k + 1] - c.u[k];
  double t = (u - c.u[k]) / h;
  double t2 = t * t;
  Vec2 m0 = c.vel[k] * h, m1 = c.vel[k + 1] * h;
  Vec2 dpdt = c.pos[k] * (6 * t2 - 6 * t) + m0 * (3 * t2 - 4 * t + 1) +
              c.pos[k + 1] * (-6 * t2 + 6 * t) + m1 * (3 * t2 - 2 * t);
  return dpdt / h;
}

RegularCurve resample_arclength(const RegularCurve& c, std::size_t n) {
  assert(n >= 2);
  std::vector<double> speed(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) speed[k] = norm(c.vel[k]);
  std::vector<double> s(c.size());
  kernels::cumtrapz(c.u, speed, s);
  double total = s.back();

  RegularCurve out;
  out.closed = c.closed;
  out.u.resize(n);
  out.pos.resize(n);
  out.vel.resize(n);
  std::size_t k = 0;
  for (std::size_t j = 0; j < n; ++j) {
    double target = total * static_cast<double>(j) / static_cast<double>(n - 1);
    while (k + 2 < c.size() && s[k + 1] <= target) ++k;
    double seg = s[k + 1] - s[k];
    double t = seg > 0.0 ? (target - s[k]) / seg : 0.0;
    double uu = c.u[k] + t * (c.u[k + 1] - c.u[k]);
    out.u[j] = target;
    if (j == 0) {
      out.pos[j] = c.pos.front();
      out.vel[j] = normalized(c.vel.front());
    } else if (j + 1 == n) {
      out.pos[j] = c.pos.back();
      out.vel[j] = normalized(c.vel.back());
    } else {
      out.pos[j] = eval_pos(c, uu);
      out.vel[j] = normalized(eval_vel(c, uu));
    }
  }
  return out;
}

RegularCurve slice(const RegularCurve& c, double ua, double ub, std::size_t n) {
  assert(n >= 2 && ua < ub);
  RegularCurve out;
  out.closed = false;
  out.u.resize(n);
  out.pos.resize(n);
  out.vel.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    double uu = ua + (ub - ua) * static_cast<double>(j) / static_cast<double>(n - 1);
    out.u[j] = uu;
    out.pos[j] = eval_pos(c, uu);
    out.vel[j] = eval_vel(c, uu);
  }
  return out;
}

// --- constructors ----------------------------------------------------------

RegularCurve curve_from_points(std::vector<double> u, std::vector<Vec2> pos,
                               bool closed) {
  std::size_t n = u.size();
  if (n < 3 || pos.size() != n)
    throw Error(ErrorCode::InvalidInput, "need >= 3 aligned point samples");
  RegularCurve c;
  c.u = std::move(u);
  c.pos = std::move(pos);
  c.vel.resize(n);
  c.closed = closed;

  auto central = [&c](std::size_t k, std::size_t km, std::size_t kp, double hm,
                      double hp) {
    // second order on a nonuniform stencil
    Vec2 fwd = (c.pos[kp] - c.pos[k]) / hp;
    Vec2 bwd = (c.pos[k] - c.pos[km]) / hm;
    c.vel[k] = (fwd * hm + bwd * hp) / (hm + hp);
  };

  for (std::size_t k = 1; k + 1 < n; ++k)
    central(k, k - 1, k + 1, c.u[k] - c.u[k - 1], c.u[k + 1] - c.u[k]);

  if (closed) {
    // the last sample duplicates the first; wrap the stencil
    double hm = c.u[n - 1] - c.u[n - 2];
    double hp = c.u[1] - c.u[0];
    Vec2 fwd = (c.pos[1] - c.pos[0]) / hp;
    Vec2 bwd = (c.pos[0] - c.pos[n - 2]) / hm;
    c.vel[0] = (fwd * hm + bwd * hp) / (hm + hp);
    c.vel[n - 1] = c.vel[0];
  } else {
    // one sided second order
    double h0 = c.u[1] - c.u[0], h1 = c.u[2] - c.u[1];
    c.vel[0] = (c.pos[1] - c.pos[0]) * ((2 * h0 + h1) / (h0 * (h0 + h1))) -
               (c.pos[2] - c.pos[1]) * (h0 / (h1 * (h0 + h1)));
    double g1 = c.u[n - 1] - c.u[n - 2], g0 = c.u[n - 2] - c.u[n - 3];
    c.vel[n - 1] =
        (c.pos[n - 1] - c.pos[n - 2]) * ((2 * g1 + g0) / (g1 * (g0 + g1))) -
        (c.pos[n - 2] - c.pos[n - 3]) * (g1 / (g0 * (g0 + g1)));
  }
  return c;
}

RegularCurve make_circle(Vec2 center, double radius, int turns, double phase,
                         std::size_t n) {
  if (turns == 0 || radius <= 0.0)
    throw Error(ErrorCode::InvalidInput, "circle needs nonzero turns and radius");
  RegularCurve c;
  c.closed = true;
  c.u.resize(n);
  c.pos.resize(n);
  c.vel.resize(n);
  double w = kTwoPi * turns;
  for (std::size_t k = 0; k < n; ++k) {
    double t = static_cast<double>(k) / static_cast<double>(n - 1);
    double ang = phase + w * t;
    c.u[k] = t;
    c.pos[k] = center + Vec2{radius * std::cos(ang), radius * std::sin(ang)};
    c.vel[k] = Vec2{-radius * w * std::sin(ang), radius * w * std::cos(ang)};
  }
  c.pos.back() = c.pos.front();
  c.vel.back() = c.vel.front();
  return c;
}

RegularCurve make_arc(Vec2 center, double radius, double phase, double extent,
                      std::size_t n) {
  if (extent == 0.0 || radius <= 0.0)
    throw Error(ErrorCode::InvalidInput, "arc needs nonzero extent and radius");
  RegularCurve c;
  c.u.resize(n);
  c.pos.resize(n);
  c.vel.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    double t = static_cast<double>(k) / static_cast<double>(n - 1);
    double ang = phase + extent * t;
    c.u[k] = t;
    c.pos[k] = center + Vec2{radius * std::cos(ang), radius * std::sin(ang)};
    c.vel[k] = Vec2{-radius * extent * std::sin(ang), radius * extent * std::cos(ang)};
  }
  return c;
}

RegularCurve make_segment(Vec2 p, Vec2 q, std::size_t n) {
  if (norm(q - p) == 0.0)
    throw Error(ErrorCode::CoincidentPoints, "segment endpoints coincide");
  RegularCurve c;
  c.u.resize(n);
  c.pos.resize(n);
  c.vel.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    double t = static_cast<double>(k) / static_cast<double>(n - 1);
    c.u[k] = t;
    c.pos[k] = p + (q - p) * t;
    c.vel[k] = q - p;
  }
  return c;
}

RegularCurve make_lemniscate(Vec2 center, double a, std::size_t n) {
  RegularCurve c;
  c.closed = true;
  c.u.resize(n);
  c.pos.resize(n);
  c.vel.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    double t = kTwoPi * static_cast<double>(k) / static_cast<double>(n - 1);
    c.u[k] = t / kTwoPi;
    c.pos[k] = center + Vec2{a * std::cos(t), 0.5 * a * std::sin(2 * t)};
    c.vel[k] = Vec2{-a * std::sin(t), a * std::cos(2 * t)} * kTwoPi;
  }
  c.pos.back() = c.pos.front();
  c.vel.back() = c.vel.front();
  return c;
}

RegularCurve make_hermite(Vec2 p, Vec2 dp, Vec2 q, Vec2 dq, double m,
                          std::size_t n) {
  Vec2 m0 = normalized(dp) * m, m1 = normalized(dq) * m;
  RegularCurve c;
  c.u.resize(n);
  c.pos.resize(n);
  c.vel.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    double t = static_cast<double>(k) / static_cast<double>(n - 1);
    double t2 = t * t, t3 = t2 * t;
    c.u[k] = t;
    c.pos[k] = p * (2 * t3 - 3 * t2 + 1) + m0 * (t3 - 2 * t2 + t) +
               q * (-2 * t3 + 3 * t2) + m1 * (t3 - t2);
    c.vel[k] = p * (6 * t2 - 6 * t) + m0 * (3 * t2 - 4 * t + 1) +
               q * (-6 * t2 + 6 * t) + m1 * (3 * t2 - 2 * t);
  }
  c.pos.front() = p;
  c.vel.front() = m0;
  c.pos.back() = q;
  c.vel.back() = m1;
  return c;
}

RegularCurve insert_kink(const RegularCurve& c, double u0, int sign,
                         double radius, std::size_t n_loop) {
  if (sign != 1 && sign != -1)
    throw Error(ErrorCode::InvalidInput, "kink sign must be +1 or -1");
  if (u0 <= c.u.front() || u0 >= c.u.back())
    throw Error(ErrorCode::InvalidInput, "kink parameter must be interior");

  Vec2 P = eval_pos(c, u0);
  Vec2 v = eval_vel(c, u0);
  double speed = norm(v);
  Vec2 e = v / speed;
  Vec2 C = P + perp(e) * (sign * radius);
  Vec2 v0 = P - C;

  // pace the loop so its speed matches the local speed
  double du = kTwoPi * radius / speed;

  RegularCurve out;
  out.closed = c.closed;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c.u[k] >= u0) break;
    out.u.push_back(c.u[k]);
    out.pos.push_back(c.pos[k]);
    out.vel.push_back(c.vel[k]);
  }
  for (std::size_t k = 0; k < n_loop; ++k) {
    double phi = kTwoPi * static_cast<double>(k) / static_cast<double>(n_loop - 1);
    Mat2 R = rotation(sign * phi);
    out.u.push_back(u0 + du * phi / kTwoPi);
    out.pos.push_back(C + R * v0);
    out.vel.push_back((R * perp(v0)) * (sign * speed / radius));
  }
  double eps = 1e-12 * (c.u.back() - c.u.front());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c.u[k] <= u0 + eps) continue;
    out.u.push_back(c.u[k] + du);
    out.pos.push_back(c.pos[k]);
    out.vel.push_back(c.vel[k]);
  }
  return out;
}

}  // namespace surfwind

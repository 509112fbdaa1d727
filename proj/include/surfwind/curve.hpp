#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "surfwind/errors.hpp"
#include "surfwind/geom.hpp"
#include "surfwind/tolerances.hpp"

namespace surfwind {

// Sampled immersed curve: strictly increasing parameters, positions and
// nonvanishing velocities. Adjacent unit directions must stay within a
// quarter turn of each other so direction unwrapping is unambiguous.
struct RegularCurve {
  std::vector<double> u;
  std::vector<Vec2> pos;
  std::vector<Vec2> vel;
  bool closed = false;

  std::size_t size() const { return u.size(); }
  Vec2 front_dir() const { return normalized(vel.front()); }
  Vec2 back_dir() const { return normalized(vel.back()); }
};

struct Violation {
  std::size_t index;
  ErrorCode code;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

ValidationReport validate_regular(const RegularCurve& c,
                                  const Tolerances& tol = default_tol());

// throws InvalidInput/SamplingTooCoarse/... on the first violation
void require_valid(const RegularCurve& c, const Tolerances& tol = default_tol());

// Continuous choice of direction angle along the curve. theta[k] lifts the
// angle of vel[k]; the branch is fixed by theta[0].
struct AngleFunction {
  std::vector<double> u;
  std::vector<double> theta;

  double at_start() const { return theta.front(); }
  double at_end() const { return theta.back(); }
};

// branch_offset shifts theta(a) by 2*pi*branch_offset away from the
// canonical representative in [0, 2*pi).
AngleFunction angle_function(const RegularCurve& c, int branch_offset = 0);

// (theta(b) - theta(a)) / 2pi; branch independent
double i_index(const RegularCurve& c);

// (theta(b) + theta(a)) / 2pi for the given branch; well defined mod 2
double j_index(const RegularCurve& c, int branch_offset = 0);
double j_index(const AngleFunction& a);

struct IntegralityReport {
  double i_value = 0.0;
  double j_value = 0.0;  // canonical branch
  bool i_forced_integral = false;  // end directions parallel
  bool i_forced_half = false;      // end directions opposite
  bool j_forced_integral = false;  // theta(b) = -theta(a) mod 2pi
  bool j_forced_half = false;      // theta(b) = pi - theta(a) mod 2pi
  double i_residual_int = 0.0;     // distance to nearest integer
  double j_residual_int = 0.0;
};

IntegralityReport integrality_conditions(const RegularCurve& c,
                                         const Tolerances& tol = default_tol());

// --- plumbing -------------------------------------------------------------

double curve_length(const RegularCurve& c);

RegularCurve reverse_curve(const RegularCurve& c);

// requires matching junction position and direction
RegularCurve concat(const RegularCurve& a, const RegularCurve& b,
                    const Tolerances& tol = default_tol());

RegularCurve translate(const RegularCurve& c, Vec2 d);

// cubic Hermite evaluation between samples
Vec2 eval_pos(const RegularCurve& c, double u);
Vec2 eval_vel(const RegularCurve& c, double u);

// resample to n samples uniform in arclength; parameter becomes arclength
RegularCurve resample_arclength(const RegularCurve& c, std::size_t n);

// restrict to [ua, ub], resampled uniformly in parameter
RegularCurve slice(const RegularCurve& c, double ua, double ub, std::size_t n);

// map through a differentiable plane map with jacobian df
template <class F, class DF>
RegularCurve mapped(const RegularCurve& c, F&& f, DF&& df) {
  RegularCurve out;
  out.u = c.u;
  out.closed = c.closed;
  out.pos.resize(c.size());
  out.vel.resize(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    out.pos[k] = f(c.pos[k]);
    out.vel[k] = df(c.pos[k]) * c.vel[k];
  }
  return out;
}

// --- constructors ----------------------------------------------------------

// velocities by second order central differences (one sided at open ends)
RegularCurve curve_from_points(std::vector<double> u, std::vector<Vec2> pos,
                               bool closed);

// turns may be negative; the last sample duplicates the first when |turns|=1
RegularCurve make_circle(Vec2 center, double radius, int turns = 1,
                         double phase = 0.0, std::size_t n = 4096);

// counterclockwise arc of the given angular extent (radians, signed)
RegularCurve make_arc(Vec2 center, double radius, double phase, double extent,
                      std::size_t n = 2048);

RegularCurve make_segment(Vec2 p, Vec2 q, std::size_t n = 64);

// figure eight (Gerono form), crossing at center, total turning zero
RegularCurve make_lemniscate(Vec2 center, double a, std::size_t n = 4096);

// cubic with prescribed endpoints and end directions (unit), tangent scale m
RegularCurve make_hermite(Vec2 p, Vec2 dp, Vec2 q, Vec2 dq, double m,
                          std::size_t n = 1024);

// insert a full loop tangent at parameter u0; sign +1 adds one left turn,
// -1 one right turn. The loop starts and ends at the insertion point with
// the local direction, so regularity is preserved.
RegularCurve insert_kink(const RegularCurve& c, double u0, int sign,
                         double radius, std::size_t n_loop = 512);

}  // namespace surfwind

#include "surfwind/lift.hpp"

#include <cmath>
#include <optional>

namespace surfwind {

namespace {

Isometry flat_translation(double x, double y) {
  return euclidean_translation({x, y});
}

Isometry moebius_element(long long k) {
  double s = (k % 2 == 0) ? 1.0 : -1.0;
  return euclidean_isometry(Mat2{1.0, 0.0, 0.0, s}, {static_cast<double>(k), 0.0});
}

Isometry klein_element(long long m, long long n) {
  double s = (((n % 2) + 2) % 2 == 0) ? 1.0 : -1.0;
  return euclidean_isometry(Mat2{s, 0.0, 0.0, 1.0},
                            {static_cast<double>(m), static_cast<double>(n)});
}

struct Candidate {
  Isometry deck;
  Vec2 image;
};

// orbit points of p whose deck shifts sit near the target
void flat_candidates(const SurfaceModel& s, Vec2 p, Vec2 target,
                     std::vector<Candidate>& out) {
  out.clear();
  auto add = [&](const Isometry& t) { out.push_back({t, apply(t, p)}); };
  switch (s.kind) {
    case SurfaceKind::Plane:
      add(identity_isometry(Geometry::Euclidean));
      return;
    case SurfaceKind::Cylinder: {
      long long k0 = std::llround(target.x - p.x);
      for (long long j = -1; j <= 1; ++j)
        add(flat_translation(static_cast<double>(k0 + j), 0.0));
      return;
    }
    case SurfaceKind::Torus: {
      long long m0 = std::llround(target.x - p.x);
      long long n0 = std::llround(target.y - p.y);
      for (long long j = -1; j <= 1; ++j)
        for (long long l = -1; l <= 1; ++l)
          add(flat_translation(static_cast<double>(m0 + j),
                               static_cast<double>(n0 + l)));
      return;
    }
    case SurfaceKind::Moebius: {
      long long k0 = std::llround(target.x - p.x);
      for (long long j = -1; j <= 1; ++j) add(moebius_element(k0 + j));
      return;
    }
    case SurfaceKind::Klein: {
      long long n0 = std::llround(target.y - p.y);
      for (long long dn = -1; dn <= 1; ++dn) {
        long long n = n0 + dn;
        long long m0 = (((n % 2) + 2) % 2 == 0) ? std::llround(target.x - p.x)
                                                : std::llround(target.x + p.x);
        for (long long dm = -1; dm <= 1; ++dm) add(klein_element(m0 + dm, n));
      }
      return;
    }
    case SurfaceKind::HyperbolicCustom:
      break;
  }
}

}  // namespace

std::optional<Isometry> deck_taking(const SurfaceModel& s, Vec2 p, Vec2 q,
                                    double tol) {
  auto ok = [&](const Isometry& t) -> std::optional<Isometry> {
    if (norm(apply(t, p) - q) <= tol) return t;
    return std::nullopt;
  };
  switch (s.kind) {
    case SurfaceKind::Plane:
      return ok(identity_isometry(Geometry::Euclidean));
    case SurfaceKind::Cylinder:
      return ok(flat_translation(std::round(q.x - p.x), 0.0));
    case SurfaceKind::Torus:
      return ok(flat_translation(std::round(q.x - p.x), std::round(q.y - p.y)));
    case SurfaceKind::Moebius:
      return ok(moebius_element(std::llround(q.x - p.x)));
    case SurfaceKind::Klein: {
      long long n = std::llround(q.y - p.y);
      long long m = (((n % 2) + 2) % 2 == 0) ? std::llround(q.x - p.x)
                                             : std::llround(q.x + p.x);
      return ok(klein_element(m, n));
    }
    case SurfaceKind::HyperbolicCustom:
      break;
  }
  return std::nullopt;
}

LiftedCurve lift_path(const SurfaceModel& s, const RegularCurve& base_curve,
                      Vec2 initial_lift, const Tolerances& tol) {
  if (s.kind == SurfaceKind::HyperbolicCustom)
    throw Error(ErrorCode::UnsupportedGeometry,
                "quotient-chart lifting is closed form for flat models only");
  std::size_t n = base_curve.size();
  if (n < 2 || base_curve.pos.size() != n || base_curve.vel.size() != n)
    throw Error(ErrorCode::InvalidInput, "need >= 2 aligned samples");

  std::optional<Isometry> s0 =
      deck_taking(s, base_curve.pos.front(), initial_lift, tol.pos);
  if (!s0)
    throw Error(ErrorCode::InvalidInput,
                "initial lift does not sit over the curve start");

  LiftedCurve out;
  out.surface = s;
  out.cover.u = base_curve.u;
  out.cover.pos.resize(n);
  out.cover.vel.resize(n);
  out.cover.closed = false;
  out.cover.pos[0] = apply(*s0, base_curve.pos.front());
  out.cover.vel[0] = differential(*s0, base_curve.pos.front()) * base_curve.vel.front();

  std::vector<Candidate> cand;
  Isometry current = *s0;
  for (std::size_t k = 1; k < n; ++k) {
    double du = base_curve.u[k] - base_curve.u[k - 1];
    Vec2 predicted = out.cover.pos[k - 1] + out.cover.vel[k - 1] * du;
    flat_candidates(s, base_curve.pos[k], predicted, cand);
    double best = 1e300;
    for (const Candidate& c : cand) {
      double dist = norm(c.image - predicted);
      if (dist < best) {
        best = dist;
        current = c.deck;
        out.cover.pos[k] = c.image;
      }
    }
    if (best > 0.4)
      throw Error(ErrorCode::SamplingTooCoarse,
                  "step at sample " + std::to_string(k) +
                      " too large to pick a deck image unambiguously");
    out.cover.vel[k] = current.rot * base_curve.vel[k];
  }

  std::optional<Isometry> term =
      deck_taking(s, out.cover.pos.front(), out.cover.pos.back(), tol.pos);
  if (!term)
    throw Error(ErrorCode::EndpointMismatch,
                "lift endpoints are not related by a deck element; base curve "
                "must close up in the quotient");
  out.terminal = *term;
  out.word = deck_word_of(s, out.terminal);
  out.has_word = true;
  require_valid(out.cover, tol);
  return out;
}

LiftedCurve lift_given(const SurfaceModel& s, RegularCurve cover_curve,
                       const GroupWord& w, const Tolerances& tol) {
  require_valid(cover_curve, tol);
  for (std::size_t k = 0; k < cover_curve.size(); ++k) {
    if (!in_domain(s, cover_curve.pos[k]))
      throw Error(ErrorCode::OutOfDomain,
                  "cover sample " + std::to_string(k) + " leaves the cover domain");
  }
  Isometry t = word_isometry(s, w);
  if (norm(apply(t, cover_curve.pos.front()) - cover_curve.pos.back()) > tol.pos)
    throw Error(ErrorCode::EndpointMismatch,
                "word does not carry the start of the cover curve to its end");
  LiftedCurve out;
  out.surface = s;
  out.cover = std::move(cover_curve);
  out.terminal = t;
  out.word = reduce_word(w);
  out.has_word = true;
  return out;
}

bool is_null_class(const LiftedCurve& c, double tol) {
  return is_identity(c.terminal, tol);
}

bool is_regularly_closed(const LiftedCurve& c, const Tolerances& tol) {
  if (norm(apply(c.terminal, c.base()) - c.end()) > tol.pos) return false;
  Vec2 pushed = push_dir(c.terminal, c.base(), c.cover.vel.front());
  return std::abs(signed_angle(pushed, c.cover.vel.back())) <= tol.ang;
}

void require_regularly_closed(const LiftedCurve& c, const Tolerances& tol) {
  if (!is_regularly_closed(c, tol))
    throw Error(ErrorCode::InvalidInput,
                "lift does not close up as a regular curve on the surface");
}

LiftedCurve transform_lift(const LiftedCurve& c, const Isometry& S) {
  LiftedCurve out;
  out.surface = c.surface;
  out.cover = mapped(
      c.cover, [&S](Vec2 p) { return apply(S, p); },
      [&S](Vec2 p) { return differential(S, p); });
  out.terminal = compose(S, compose(c.terminal, invert(S)));
  if (c.surface.kind != SurfaceKind::HyperbolicCustom) {
    out.word = deck_word_of(c.surface, out.terminal);
    out.has_word = true;
  }
  return out;
}

GroupWord deck_word_of(const SurfaceModel& s, const Isometry& t) {
  GroupWord w;
  switch (s.kind) {
    case SurfaceKind::Plane:
      if (!is_identity(t))
        throw Error(ErrorCode::InvalidInput, "plane deck group is trivial");
      return w;
    case SurfaceKind::Cylinder: {
      long long k = std::llround(t.shift.x);
      if (k != 0) w.push_back({"a", static_cast<int>(k)});
      break;
    }
    case SurfaceKind::Torus: {
      long long m = std::llround(t.shift.x), n = std::llround(t.shift.y);
      if (m != 0) w.push_back({"a", static_cast<int>(m)});
      if (n != 0) w.push_back({"b", static_cast<int>(n)});
      break;
    }
    case SurfaceKind::Moebius: {
      long long k = moebius_power_of(t);
      if (k != 0) w.push_back({"g", static_cast<int>(k)});
      break;
    }
    case SurfaceKind::Klein: {
      auto [m, n] = klein_normal_form_of(t);
      if (m != 0) w.push_back({"a", static_cast<int>(m)});
      if (n != 0) w.push_back({"b", static_cast<int>(n)});
      break;
    }
    case SurfaceKind::HyperbolicCustom:
      throw Error(ErrorCode::UnsupportedGeometry,
                  "no closed-form word recovery for custom groups");
  }
  if (!isometry_equal(word_isometry(s, w), t, 1e-9))
    throw Error(ErrorCode::InvalidInput, "isometry is not a deck element");
  return w;
}

GroupWord class_word(const LiftedCurve& c) {
  if (c.has_word) return c.word;
  return deck_word_of(c.surface, c.terminal);
}

}  // namespace surfwind

#include "surfwind/geodesic.hpp"

#include <cmath>

namespace surfwind {

namespace {

double canonical_start_angle(Vec2 dir) {
  double t = angle_of(dir);
  return (t < 0.0) ? t + kTwoPi : t;
}

bool is_linear_identity(const Mat2& m) {
  return std::abs(m.a - 1.0) <= 1e-12 && std::abs(m.b) <= 1e-12 &&
         std::abs(m.c) <= 1e-12 && std::abs(m.d - 1.0) <= 1e-12;
}

}  // namespace

Vec2 GeodesicSegment::start_dir() const {
  switch (type) {
    case GeodesicType::EuclideanSegment:
      return normalized(q - p);
    case GeodesicType::VerticalSegment:
      return {0.0, q.y > p.y ? 1.0 : -1.0};
    case GeodesicType::CircularArc: {
      double s = phi_q > phi_p ? 1.0 : -1.0;
      return {-s * std::sin(phi_p), s * std::cos(phi_p)};
    }
  }
  return {1.0, 0.0};
}

Vec2 GeodesicSegment::end_dir() const {
  switch (type) {
    case GeodesicType::EuclideanSegment:
      return normalized(q - p);
    case GeodesicType::VerticalSegment:
      return {0.0, q.y > p.y ? 1.0 : -1.0};
    case GeodesicType::CircularArc: {
      double s = phi_q > phi_p ? 1.0 : -1.0;
      return {-s * std::sin(phi_q), s * std::cos(phi_q)};
    }
  }
  return {1.0, 0.0};
}

double GeodesicSegment::length() const {
  if (geom == Geometry::Euclidean) return norm(q - p);
  return hyperbolic_distance(p, q);
}

GeodesicSegment shortest_geodesic(Geometry geom, Vec2 p, Vec2 q,
                                  const Tolerances& tol) {
  if (norm(q - p) <= tol.pos)
    throw Error(ErrorCode::CoincidentPoints,
                "no unique geodesic between coincident points");
  GeodesicSegment g;
  g.geom = geom;
  g.p = p;
  g.q = q;
  if (geom == Geometry::Euclidean) {
    g.type = GeodesicType::EuclideanSegment;
    return g;
  }
  if (p.y <= 0.0 || q.y <= 0.0)
    throw Error(ErrorCode::OutOfDomain, "half-plane points need y > 0");
  if (std::abs(p.x - q.x) <= tol.pos) {
    g.type = GeodesicType::VerticalSegment;
    return g;
  }
  g.type = GeodesicType::CircularArc;
  g.center_x = (norm2(q) - norm2(p)) / (2.0 * (q.x - p.x));
  g.radius = norm(p - Vec2{g.center_x, 0.0});
  g.phi_p = std::atan2(p.y, p.x - g.center_x);
  g.phi_q = std::atan2(q.y, q.x - g.center_x);
  return g;
}

double geodesic_i_index(const GeodesicSegment& g) {
  if (g.type != GeodesicType::CircularArc) return 0.0;
  return (g.phi_q - g.phi_p) / kTwoPi;
}

double geodesic_j_index(const GeodesicSegment& g) {
  return canonical_start_angle(g.start_dir()) / kPi + geodesic_i_index(g);
}

RegularCurve geodesic_curve(const GeodesicSegment& g, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "need >= 2 samples");
  if (g.type != GeodesicType::CircularArc) {
    RegularCurve c = make_segment(g.p, g.q, n);
    return c;
  }
  RegularCurve c;
  c.closed = false;
  c.u.resize(n);
  c.pos.resize(n);
  c.vel.resize(n);
  double dphi = g.phi_q - g.phi_p;
  for (std::size_t k = 0; k < n; ++k) {
    double u = static_cast<double>(k) / static_cast<double>(n - 1);
    double phi = g.phi_p + u * dphi;
    c.u[k] = u;
    c.pos[k] = Vec2{g.center_x, 0.0} +
               Vec2{g.radius * std::cos(phi), g.radius * std::sin(phi)};
    c.vel[k] = Vec2{-std::sin(phi), std::cos(phi)} * (g.radius * dphi);
  }
  c.pos.back() = g.q;
  return c;
}

LiftedCurve closed_geodesic(const SurfaceModel& s, const GroupWord& w,
                            Vec2 base_hint, std::size_t n,
                            const Tolerances& tol) {
  Isometry t = word_isometry(s, w);
  if (is_identity(t))
    throw Error(ErrorCode::InvalidInput,
                "the null class contains no closed geodesic");

  Vec2 base = base_hint;
  if (s.geom == Geometry::Euclidean) {
    if (!is_linear_identity(t.rot)) {
      // glide reflection: base must sit on the invariant axis
      if (std::abs(t.rot.d + 1.0) <= 1e-12) {
        base.y = 0.0;  // strip model, axis is the core line
      } else {
        base.x = t.shift.x / 2.0;  // reflected x-axis, vertical core line
      }
    }
  } else {
    if (t.conj)
      throw Error(ErrorCode::UnsupportedGeometry,
                  "no geodesic construction for orientation-reversing classes");
    double tr = t.a + t.d;
    if (std::abs(tr) <= 2.0 + 1e-12)
      throw Error(ErrorCode::InvalidInput,
                  "deck element is not hyperbolic; it has no closed geodesic");
    if (std::abs(t.c) <= 1e-12) {
      double xf = t.b / (t.d - t.a);
      base = {xf, base_hint.y > 0.0 ? base_hint.y : 1.0};
    } else {
      double root = std::sqrt(tr * tr - 4.0);
      double x1 = (t.a - t.d - root) / (2.0 * t.c);
      double x2 = (t.a - t.d + root) / (2.0 * t.c);
      double cx = 0.5 * (x1 + x2), r = 0.5 * std::abs(x2 - x1);
      double phi = kPi / 2.0;
      if (base_hint.y > 0.0) phi = std::atan2(base_hint.y, base_hint.x - cx);
      base = Vec2{cx, 0.0} + Vec2{r * std::cos(phi), r * std::sin(phi)};
    }
  }
  if (!in_domain(s, base))
    throw Error(ErrorCode::OutOfDomain, "geodesic base point leaves the domain");

  Vec2 image = apply(t, base);
  GeodesicSegment seg = shortest_geodesic(s.geom, base, image, tol);
  return lift_given(s, geodesic_curve(seg, n), w, tol);
}

LiftedCurve horocycle_loop(const SurfaceModel& s, const GroupWord& w,
                           double x0, double y0, std::size_t n,
                           const Tolerances& tol) {
  if (s.geom != Geometry::HyperbolicUHP)
    throw Error(ErrorCode::UnsupportedGeometry,
                "horocycles live in the hyperbolic cover");
  Isometry t = word_isometry(s, w);
  double sign = (t.a + t.d) < 0.0 ? -1.0 : 1.0;
  double a = sign * t.a, b = sign * t.b, c = sign * t.c, d = sign * t.d;
  if (t.conj || std::abs(a - 1.0) > 1e-9 || std::abs(d - 1.0) > 1e-9 ||
      std::abs(c) > 1e-9 || std::abs(b) <= 1e-9)
    throw Error(ErrorCode::InvalidInput,
                "word must act as a parabolic translation z -> z + s");
  if (y0 <= 0.0)
    throw Error(ErrorCode::OutOfDomain, "horocycle height must be positive");
  RegularCurve cover = make_segment({x0, y0}, {x0 + b, y0}, n);
  return lift_given(s, cover, w, tol);
}

LiftedCurve figure_eight_in_disc(const SurfaceModel& s, Vec2 center,
                                 double scale, std::size_t n,
                                 const Tolerances& tol) {
  if (s.kind == SurfaceKind::HyperbolicCustom)
    throw Error(ErrorCode::UnsupportedGeometry,
                "embedded disc size is unknown for custom groups");
  if (scale <= 0.0 || scale > 0.45)
    throw Error(ErrorCode::InvalidInput,
                "scale must lie in (0, 0.45] to stay inside an embedded disc");
  RegularCurve cover = make_lemniscate(center, scale, n);
  return lift_given(s, cover, {}, tol);
}

}  // namespace surfwind

#pragma once

#include "surfwind/lift.hpp"

namespace surfwind {

enum class GeodesicType { EuclideanSegment, VerticalSegment, CircularArc };

// shortest geodesic between two cover points. Euclidean geodesics are
// straight segments; half-plane geodesics are vertical segments or arcs of
// circles centered on the real axis, traversed from p to q.
struct GeodesicSegment {
  GeodesicType type = GeodesicType::EuclideanSegment;
  Geometry geom = Geometry::Euclidean;
  Vec2 p;
  Vec2 q;
  double center_x = 0.0;  // arc only
  double radius = 0.0;    // arc only
  double phi_p = 0.0;     // arc endpoint angles in (0, pi)
  double phi_q = 0.0;

  Vec2 start_dir() const;
  Vec2 end_dir() const;
  double length() const;
};

GeodesicSegment shortest_geodesic(Geometry geom, Vec2 p, Vec2 q,
                                  const Tolerances& tol = default_tol());

// turning index of the segment: 0 for straight pieces, signed arc sweep
// over a full turn for circular arcs
double geodesic_i_index(const GeodesicSegment& g);

// rotation index companion (start angle taken in [0, 2*pi))
double geodesic_j_index(const GeodesicSegment& g);

// sampled parametrization on [0, 1], suitable for rendering
RegularCurve geodesic_curve(const GeodesicSegment& g, std::size_t n = 256);

// closed geodesic in the class of the given word, lifted to the cover.
// Flat translations accept any base point; glide reflections require the
// base to sit on their axis and the hint is projected onto it. Half-plane
// elements must be hyperbolic (real axis endpoints) and orientation
// preserving; the base hint is projected onto the axis.
LiftedCurve closed_geodesic(const SurfaceModel& s, const GroupWord& w,
                            Vec2 base_hint, std::size_t n = 1024,
                            const Tolerances& tol = default_tol());

// closed horocycle at the given height for a parabolic deck translation
// z -> z + s; the lift is the horizontal segment from (x0, y0) to
// (x0 + s, y0)
LiftedCurve horocycle_loop(const SurfaceModel& s, const GroupWord& w,
                           double x0, double y0, std::size_t n = 1024,
                           const Tolerances& tol = default_tol());

// null-class figure eight contained in an embedded disc of the surface;
// scale is capped so the curve stays inside one fundamental domain
LiftedCurve figure_eight_in_disc(const SurfaceModel& s, Vec2 center,
                                 double scale, std::size_t n = 4096,
                                 const Tolerances& tol = default_tol());

}  // namespace surfwind

#pragma once

#include "surfwind/errors.hpp"
#include "surfwind/geom.hpp"

namespace surfwind {

enum class Geometry { Euclidean, HyperbolicUHP };

// Rigid motion of the plane or of the upper half plane.
//
// Euclidean: x -> rot*x + shift with rot orthogonal.
// Hyperbolic: z -> M(z) for conj=false, z -> M(-conj(z)) for conj=true,
// where M = [[a,b],[c,d]] is real with det 1 acting as a Moebius map. Both
// forms preserve Im z > 0; M and -M act identically.
struct Isometry {
  Geometry geom = Geometry::Euclidean;
  Mat2 rot;
  Vec2 shift;
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  bool conj = false;
};

Isometry identity_isometry(Geometry g);
Isometry euclidean_isometry(const Mat2& rot, Vec2 shift);
Isometry euclidean_translation(Vec2 shift);
Isometry mobius_isometry(double a, double b, double c, double d, bool conj = false);

// +1 for orientation preserving, -1 otherwise
int orientation_sign(const Isometry& t);

Vec2 apply(const Isometry& t, Vec2 p);
Mat2 differential(const Isometry& t, Vec2 p);
Isometry compose(const Isometry& t1, const Isometry& t2);  // t1 after t2
Isometry invert(const Isometry& t);

// hyperbolic comparison is projective: M and -M are the same map
bool isometry_equal(const Isometry& t1, const Isometry& t2, double tol = 1e-9);
bool is_identity(const Isometry& t, double tol = 1e-9);

// unit direction of the pushforward of e at p
Vec2 push_dir(const Isometry& t, Vec2 p, Vec2 e);

double hyperbolic_distance(Vec2 p, Vec2 q);

}  // namespace surfwind

#pragma once

#include <optional>
#include <string>

#include "surfwind/geodesic.hpp"

namespace surfwind {

enum class ValueKind { Integer, Mod2, NonNegInteger };

struct WindingValue {
  ValueKind kind = ValueKind::Integer;
  long long value = 0;  // Mod2 values are stored as 0 or 1
  double raw = 0.0;     // value before snapping
};

// snap a real to the nearest integer; the residual must stay within tol_int
WindingValue integer_value(double raw, double tol_int);
WindingValue mod2_value(double raw, double tol_int);

// effect of changing the lift by a deck element of the given orientation
// sign: integers negate under sign -1, parity classes are unchanged
WindingValue scale_winding(const WindingValue& v, int sign);

bool winding_equal(const WindingValue& x, const WindingValue& y);
std::string winding_to_string(const WindingValue& v);

// turn from an incoming direction to an outgoing one at a shared point,
// measured in (-pi, pi); refuses near-straight angles where the sign of the
// turn is numerically meaningless
double external_angle(Vec2 incoming, Vec2 outgoing, double guard = 1e-6);

// based winding number of a regularly closed lift, measured at its base
// lift. Null classes give the turning index of the lift itself; other
// classes compare against the geodesic chord between the lift endpoints.
// Orientation-preserving classes give integers, orientation-reversing ones
// parities.
WindingValue based_winding_number(const LiftedCurve& c,
                                  const Tolerances& tol = default_tol());

// winding measured at the lift moved by the deck word x; equals the
// original scaled by the orientation sign of x
WindingValue winding_at_other_lift(const LiftedCurve& c, const GroupWord& x,
                                   const Tolerances& tol = default_tol());

// rotate the outgoing direction at the base by alpha using a compactly
// supported twist near the base lift; the matching twist at the far end
// (by alpha times the orientation sign of the terminal) keeps the curve
// regularly closed. The based winding is unchanged.
LiftedCurve rotate_base_lift(const LiftedCurve& c, double alpha,
                             double collar_radius = 0.05,
                             const Tolerances& tol = default_tol());

// carry the base of a closed curve along a cover path starting at the base
// lift; returns the same free class re-based at the path endpoint with the
// based winding preserved exactly. Supported for flat models when the
// terminal is a translation, and for null classes over the hyperbolic
// cover.
LiftedCurve finger_move(const LiftedCurve& c, const RegularCurve& carry_path,
                        const Tolerances& tol = default_tol());

enum class Reversibility { No, Yes, Unsupported };

// whether some orientation-reversing deck element commutes with the class
// of the word; when it does, moving the base around that element negates
// integer windings, so only |w| is a free invariant
Reversibility is_reversible(const SurfaceModel& s, const GroupWord& w);

struct FreeReference {
  LiftedCurve gamma0;                 // anchored reference lift
  std::optional<RegularCurve> trace;  // cover path from gamma0's base lift
};

enum class FreeRule {
  OrientableInteger,   // orientable surface: integer, any lift
  ReversingMod2,       // orientation-reversing class: parity
  ReversibleAbsolute,  // reversible preserving class: |w|
  TraceAnchored        // non-reversible: integer at the anchored lift
};

struct FreeWinding {
  FreeRule rule = FreeRule::OrientableInteger;
  WindingValue value;
};

FreeWinding free_winding_number(
    const LiftedCurve& c,
    const std::optional<FreeReference>& ref = std::nullopt,
    const Tolerances& tol = default_tol());

}  // namespace surfwind

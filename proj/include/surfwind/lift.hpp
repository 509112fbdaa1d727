#pragma once

#include <optional>

#include "surfwind/curve.hpp"
#include "surfwind/surface.hpp"

namespace surfwind {

// A curve on the surface presented through the covering space: the cover
// curve together with the deck transformation carrying its start to its end.
// For closed surface curves the projection closes up; the terminal element
// encodes the homotopy class at the base lift.
struct LiftedCurve {
  SurfaceModel surface;
  RegularCurve cover;
  Isometry terminal;
  GroupWord word;
  bool has_word = false;

  Vec2 base() const { return cover.pos.front(); }
  Vec2 end() const { return cover.pos.back(); }
};

// Lift a curve given in quotient coordinates (the fundamental chart, with
// wrap jumps) starting from the given cover point. Flat surfaces only; the
// terminal deck element is identified in closed form from the endpoints.
LiftedCurve lift_path(const SurfaceModel& s, const RegularCurve& base_curve,
                      Vec2 initial_lift, const Tolerances& tol = default_tol());

// Wrap an explicitly given cover curve whose class is named by a word.
LiftedCurve lift_given(const SurfaceModel& s, RegularCurve cover_curve,
                       const GroupWord& w, const Tolerances& tol = default_tol());

bool is_null_class(const LiftedCurve& c, double tol = 1e-9);

// endpoint and end-direction closure through the terminal element
bool is_regularly_closed(const LiftedCurve& c, const Tolerances& tol = default_tol());
void require_regularly_closed(const LiftedCurve& c,
                              const Tolerances& tol = default_tol());

// S applied to the whole lift; the terminal conjugates
LiftedCurve transform_lift(const LiftedCurve& c, const Isometry& S);

// closed-form deck word for flat builtins, from the terminal element
GroupWord deck_word_of(const SurfaceModel& s, const Isometry& t);

// deck element carrying one cover point onto another, when the two sit in
// a common orbit; closed form for flat builtins
std::optional<Isometry> deck_taking(const SurfaceModel& s, Vec2 from, Vec2 to,
                                    double tol = 1e-9);

// word naming the class of the lift (stored word, or derived for flats)
GroupWord class_word(const LiftedCurve& c);

}  // namespace surfwind

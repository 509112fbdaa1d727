#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surfwind/winding.hpp"

namespace surfwind {

// Outcome of the base-fixing comparison. Lifts starting at different points
// of the same fiber are re-anchored onto the first curve's base lift before
// anything is measured, so both windings below refer to that lift.
struct BasedVerdict {
  bool same_class = false;
  bool equivalent = false;
  WindingValue w_first;
  WindingValue w_second;
};

// Two regularly closed loops through the same surface point bound a
// base-fixing regular homotopy exactly when their deck classes at the base
// agree and their based winding numbers are equal.
BasedVerdict based_equivalent(const LiftedCurve& a, const LiftedCurve& b,
                              const Tolerances& tol = default_tol());

// Outcome of the free comparison. Windings are only measured when the
// classes are conjugate; comparing anchored integers across distinct
// classes has no meaning.
struct FreeVerdict {
  bool conjugate = false;
  bool equivalent = false;
  std::optional<FreeWinding> w_first;
  std::optional<FreeWinding> w_second;
};

// Free regular homotopy: conjugate classes and equal free winding under the
// rule the class dictates. Non-reversible classes on non-orientable
// surfaces need a shared anchored reference.
FreeVerdict freely_equivalent(const LiftedCurve& a, const LiftedCurve& b,
                              const std::optional<FreeReference>& ref = std::nullopt,
                              const Tolerances& tol = default_tol());

// stable text key naming the conjugacy class of the word on the surface
std::string conjugacy_key(const SurfaceModel& s, const GroupWord& w);

// partition indices into equivalence groups, ordered by first member
std::vector<std::vector<std::size_t>> classify_based(
    const std::vector<LiftedCurve>& curves, const Tolerances& tol = default_tol());
std::vector<std::vector<std::size_t>> classify_free(
    const std::vector<LiftedCurve>& curves,
    const std::optional<FreeReference>& ref = std::nullopt,
    const Tolerances& tol = default_tol());

}  // namespace surfwind

#pragma once

namespace surfwind {

// Global defaults used unless an operation takes an explicit override.
struct Tolerances {
  double pos = 1e-9;   // endpoint / closure coincidence
  double ang = 1e-9;   // direction closure (radians)
  double integral = 1e-6;  // snap-to-integer window
};

inline const Tolerances& default_tol() {
  static const Tolerances t{};
  return t;
}

}  // namespace surfwind

#pragma once

#include <string>
#include <vector>

#include "surfwind/curve.hpp"

namespace surfwind {

struct SynthesisOptions {
  std::size_t frames_per_stage = 12;
  std::size_t samples = 1536;
  double window_fraction = 0.01;  // end collar size for loop splicing
  double cone_limit = kPi / 6.0;  // direction agreement required in blends
  Tolerances tol = default_tol();
};

struct HomotopyStage {
  std::string name;
  std::size_t first = 0;  // frame index range, inclusive
  std::size_t last = 0;
};

// Deformation between two plane curves with matched ends and equal turning
// index, as a list of frames. Interior frames are built in normalized
// coordinates (ends carried to (0,0) and (10,0) with horizontal end
// directions by a similarity plus compactly supported end twists) and
// mapped back through the exact inverse. min_speed is measured in the
// construction coordinates of each frame, where every stage is built on
// unit-speed curves; end_drift and turning_index are measured on the
// output frames.
struct HomotopyFrames {
  std::vector<RegularCurve> frames;
  std::vector<HomotopyStage> stages;

  bool spliced = false;          // loop inputs, end collars grafted
  double separation = 0.0;       // |q - p| of the trimmed pair
  double length_from = 0.0;      // normalized lengths entering the squeeze
  double length_to = 0.0;
  double spike_amplitude = 0.0;  // transverse bump used to equalize lengths
  double squeeze_scale = 0.0;    // final squeeze factor
  double squeezed_length = 0.0;

  std::vector<double> min_speed;      // per frame, construction coordinates
  std::vector<double> end_drift;      // per frame, against the input ends
  std::vector<double> turning_index;  // per frame, output coordinates
};

// Regular homotopy from one curve to the other. Open inputs must share
// endpoints and end directions; closed inputs must share the base point,
// with base directions within the cone limit (the end collars of the first
// curve are grafted onto the second, deformed frames in between). Turning
// indices must agree after normalization or IndexMismatch is thrown.
HomotopyFrames synthesize_regular_homotopy(const RegularCurve& from,
                                           const RegularCurve& to,
                                           const SynthesisOptions& opt = {});

}  // namespace surfwind

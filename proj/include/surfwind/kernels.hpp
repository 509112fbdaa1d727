#pragma once

#include <span>
#include <vector>

#include "surfwind/geom.hpp"

// Sample-loop kernels shared by the curve pipeline. Each has a plain serial
// reference implementation and an OpenMP variant; the dispatch functions pick
// one by problem size. The parallel variants are written so the result does
// not depend on the number of threads: elementwise passes own their slots and
// reductions accumulate over fixed-size blocks.

namespace surfwind::kernels {

inline constexpr std::size_t kParThreshold = 1 << 14;
inline constexpr std::size_t kSumBlock = 4096;

namespace serial {

void direction_angles(std::span<const Vec2> vel, std::span<double> out);

// principal value of consecutive angle differences, out[k] = p(a[k+1]-a[k])
void angle_deltas(std::span<const double> angles, std::span<double> out);

// theta[0] = base, theta[k+1] = theta[k] + delta[k]
void unwrap_from_deltas(double base, std::span<const double> deltas,
                        std::span<double> theta);

double block_sum(std::span<const double> v);

// cumulative trapezoid of f over grid s, out[0] = 0
void cumtrapz(std::span<const double> s, std::span<const double> f,
              std::span<double> out);

}  // namespace serial

namespace par {

void direction_angles(std::span<const Vec2> vel, std::span<double> out);
void angle_deltas(std::span<const double> angles, std::span<double> out);
double block_sum(std::span<const double> v);
void cumtrapz(std::span<const double> s, std::span<const double> f,
              std::span<double> out);

}  // namespace par

void direction_angles(std::span<const Vec2> vel, std::span<double> out);
void angle_deltas(std::span<const double> angles, std::span<double> out);
double block_sum(std::span<const double> v);
void cumtrapz(std::span<const double> s, std::span<const double> f,
              std::span<double> out);

inline void unwrap_from_deltas(double base, std::span<const double> deltas,
                               std::span<double> theta) {
  serial::unwrap_from_deltas(base, deltas, theta);  // scan stays serial
}

}  // namespace surfwind::kernels

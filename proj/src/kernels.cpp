#include "surfwind/kernels.hpp"

#include <cassert>
#include <cstdint>

namespace surfwind::kernels {

namespace serial {

void direction_angles(std::span<const Vec2> vel, std::span<double> out) {
  assert(vel.size() == out.size());
  for (std::size_t k = 0; k < vel.size(); ++k) out[k] = angle_of(vel[k]);
}

void angle_deltas(std::span<const double> angles, std::span<double> out) {
  assert(out.size() + 1 == angles.size());
  for (std::size_t k = 0; k + 1 < angles.size(); ++k)
    out[k] = principal_angle(angles[k + 1] - angles[k]);
}

void unwrap_from_deltas(double base, std::span<const double> deltas,
                        std::span<double> theta) {
  assert(theta.size() == deltas.size() + 1);
  theta[0] = base;
  for (std::size_t k = 0; k < deltas.size(); ++k) theta[k + 1] = theta[k] + deltas[k];
}

double block_sum(std::span<const double> v) {
  // fixed-block accumulation so serial and parallel agree bit for bit
  double total = 0.0;
  for (std::size_t b = 0; b < v.size(); b += kSumBlock) {
    std::size_t hi = std::min(v.size(), b + kSumBlock);
    double part = 0.0;
    for (std::size_t k = b; k < hi; ++k) part += v[k];
    total += part;
  }
  return total;
}

void cumtrapz(std::span<const double> s, std::span<const double> f,
              std::span<double> out) {
  assert(s.size() == f.size() && out.size() == s.size());
  out[0] = 0.0;
  for (std::size_t k = 0; k + 1 < s.size(); ++k)
    out[k + 1] = out[k] + 0.5 * (f[k] + f[k + 1]) * (s[k + 1] - s[k]);
}

}  // namespace serial

namespace par {

void direction_angles(std::span<const Vec2> vel, std::span<double> out) {
  assert(vel.size() == out.size());
  const std::int64_t n = static_cast<std::int64_t>(vel.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) out[k] = angle_of(vel[k]);
}

void angle_deltas(std::span<const double> angles, std::span<double> out) {
  assert(out.size() + 1 == angles.size());
  const std::int64_t n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k)
    out[k] = principal_angle(angles[k + 1] - angles[k]);
}

double block_sum(std::span<const double> v) {
  const std::int64_t nblocks =
      static_cast<std::int64_t>((v.size() + kSumBlock - 1) / kSumBlock);
  std::vector<double> parts(static_cast<std::size_t>(nblocks), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nblocks; ++b) {
    std::size_t lo = static_cast<std::size_t>(b) * kSumBlock;
    std::size_t hi = std::min(v.size(), lo + kSumBlock);
    double part = 0.0;
    for (std::size_t k = lo; k < hi; ++k) part += v[k];
    parts[static_cast<std::size_t>(b)] = part;
  }
  double total = 0.0;
  for (double p : parts) total += p;
  return total;
}

void cumtrapz(std::span<const double> s, std::span<const double> f,
              std::span<double> out) {
  assert(s.size() == f.size() && out.size() == s.size());
  if (s.size() < 2) {
    if (!out.empty()) out[0] = 0.0;
    return;
  }
  // increments in parallel, then a serial scan over them
  std::vector<double> inc(s.size() - 1);
  const std::int64_t n = static_cast<std::int64_t>(inc.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k)
    inc[k] = 0.5 * (f[k] + f[k + 1]) * (s[k + 1] - s[k]);
  out[0] = 0.0;
  for (std::size_t k = 0; k < inc.size(); ++k) out[k + 1] = out[k] + inc[k];
}

}  // namespace par

#ifdef _OPENMP
static constexpr bool kHaveOmp = true;
#else
static constexpr bool kHaveOmp = false;
#endif

void direction_angles(std::span<const Vec2> vel, std::span<double> out) {
  if (kHaveOmp && vel.size() >= kParThreshold) par::direction_angles(vel, out);
  else serial::direction_angles(vel, out);
}

void angle_deltas(std::span<const double> angles, std::span<double> out) {
  if (kHaveOmp && angles.size() >= kParThreshold) par::angle_deltas(angles, out);
  else serial::angle_deltas(angles, out);
}

double block_sum(std::span<const double> v) {
  if (kHaveOmp && v.size() >= kParThreshold) return par::block_sum(v);
  return serial::block_sum(v);
}

void cumtrapz(std::span<const double> s, std::span<const double> f,
              std::span<double> out) {
  if (kHaveOmp && s.size() >= kParThreshold) par::cumtrapz(s, f, out);
  else serial::cumtrapz(s, f, out);
}

}  // namespace surfwind::kernels

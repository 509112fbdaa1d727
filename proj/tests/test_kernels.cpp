#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "surfwind/kernels.hpp"

using namespace surfwind;

namespace {

std::vector<Vec2> random_dirs(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Vec2> v(n);
  for (auto& d : v) d = {u(rng) + 2.0, u(rng)};
  return v;
}

std::vector<double> random_values(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

std::vector<double> grid(std::size_t n) {
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = 0.001 * static_cast<double>(i);
  return s;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference bit for bit") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {17ul, 1000ul, 16384ul, 100001ul}) {
    auto dirs = random_dirs(rng, n);
    std::vector<double> ang_p(n), ang_s(n);
    kernels::par::direction_angles(dirs, ang_p);
    kernels::serial::direction_angles(dirs, ang_s);
    CHECK(bitwise_equal(ang_p, ang_s));

    std::vector<double> del_p(n - 1), del_s(n - 1);
    kernels::par::angle_deltas(ang_s, del_p);
    kernels::serial::angle_deltas(ang_s, del_s);
    CHECK(bitwise_equal(del_p, del_s));

    auto f = random_values(rng, n);
    auto s = grid(n);
    CHECK(kernels::par::block_sum(f) == kernels::serial::block_sum(f));

    std::vector<double> out_p(n), out_s(n);
    kernels::par::cumtrapz(s, f, out_p);
    kernels::serial::cumtrapz(s, f, out_s);
    CHECK(bitwise_equal(out_p, out_s));
  }
}

TEST_CASE("results do not depend on the number of threads") {
  std::mt19937_64 rng(11);
  std::size_t n = 50000;
  auto dirs = random_dirs(rng, n);
  auto f = random_values(rng, n);
  auto s = grid(n);

  std::vector<double> a1(n), a2(n), c1(n), c2(n);
#ifdef _OPENMP
  omp_set_num_threads(1);
#endif
  kernels::direction_angles(dirs, a1);
  double b1 = kernels::block_sum(f);
  kernels::cumtrapz(s, f, c1);

#ifdef _OPENMP
  omp_set_num_threads(4);
#endif
  kernels::direction_angles(dirs, a2);
  double b2 = kernels::block_sum(f);
  kernels::cumtrapz(s, f, c2);

  CHECK(bitwise_equal(a1, a2));
  CHECK(b1 == b2);
  CHECK(bitwise_equal(c1, c2));
}

TEST_CASE("dispatchers agree with the serial reference") {
  std::mt19937_64 rng(3);
  std::size_t n = 20000;
  auto dirs = random_dirs(rng, n);
  auto f = random_values(rng, n);
  auto s = grid(n);

  std::vector<double> ad(n), as(n);
  kernels::direction_angles(dirs, ad);
  kernels::serial::direction_angles(dirs, as);
  CHECK(bitwise_equal(ad, as));

  CHECK(kernels::block_sum(f) == kernels::serial::block_sum(f));

  std::vector<double> od(n), os(n);
  kernels::cumtrapz(s, f, od);
  kernels::serial::cumtrapz(s, f, os);
  CHECK(bitwise_equal(od, os));
}

TEST_CASE("cumtrapz integrates a constant exactly enough") {
  std::size_t n = 5000;
  auto s = grid(n);
  std::vector<double> f(n, 3.25), out(n);
  kernels::cumtrapz(s, f, out);
  CHECK(out.front() == 0.0);
  for (std::size_t i = 0; i < n; i += 997)
    CHECK(std::abs(out[i] - 3.25 * (s[i] - s[0])) < 1e-10);
  CHECK(std::abs(out.back() - 3.25 * (s.back() - s.front())) < 1e-10);
}

TEST_CASE("angle deltas and unwrap recover a full turn") {
  std::size_t n = 256;
  std::vector<Vec2> dirs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
    dirs[i] = {std::cos(t), std::sin(t)};
  }
  std::vector<double> angles(n + 1), deltas(n);
  kernels::direction_angles(dirs, angles);
  kernels::angle_deltas(angles, deltas);
  CHECK(std::abs(kernels::block_sum(deltas) - 2.0 * kPi) < 1e-12);

  std::vector<double> theta(n + 1);
  kernels::unwrap_from_deltas(0.25, deltas, theta);
  CHECK(theta.front() == 0.25);
  CHECK(std::abs(theta.back() - 0.25 - 2.0 * kPi) < 1e-12);
  for (std::size_t i = 0; i + 1 <= n; i += 37)
    CHECK(std::abs((theta[i + 1] - theta[i]) - deltas[i]) < 1e-12);
}

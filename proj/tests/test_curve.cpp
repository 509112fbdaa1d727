#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "surfwind/curve.hpp"

using namespace surfwind;

TEST_CASE("unit circle has turning index 1 and rotation companion 1.5") {
  auto c = make_circle({0.0, 0.0}, 1.0);
  CHECK(std::abs(i_index(c) - 1.0) < 1e-12);
  CHECK(std::abs(j_index(c) - 1.5) < 1e-12);

  auto cw = make_circle({0.0, 0.0}, 1.0, -1);
  CHECK(std::abs(i_index(cw) + 1.0) < 1e-12);
  CHECK(std::abs(j_index(cw) - 0.5) < 1e-12);

  auto dbl = make_circle({0.0, 0.0}, 1.0, 2);
  CHECK(std::abs(i_index(dbl) - 2.0) < 1e-12);
  CHECK(std::abs(j_index(dbl) - 2.5) < 1e-12);
}

TEST_CASE("branch shift moves the rotation companion by an even integer") {
  std::mt19937_64 rng(21);
  auto c = oracle::random_loop(rng, {0.0, 0.0}, 1.0);
  double j0 = j_index(c);
  for (int k : {-3, -1, 1, 2, 5}) {
    CHECK(std::abs(j_index(c, k) - j0 - 2.0 * k) < 1e-12);
  }
  CHECK(std::abs(i_index(c) - i_index(c)) == 0.0);
}

TEST_CASE("indices match an independent discrete turning sum") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    auto loop = oracle::random_loop(rng, {0.0, 0.0}, 2.0);
    CHECK(std::abs(i_index(loop) - oracle::turning_index(loop)) < 1e-9);
    CHECK(std::abs(j_index(loop) - oracle::rotation_index(loop)) < 1e-9);

    auto arc = oracle::random_arc(rng, {0.0, 0.0}, 1.0);
    CHECK(std::abs(i_index(arc) - oracle::turning_index(arc)) < 1e-9);
    CHECK(std::abs(j_index(arc) - oracle::rotation_index(arc)) < 1e-9);
  }
}

TEST_CASE("closed loops have integral turning index") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto loop = oracle::random_loop(rng, {1.0, -2.0}, 1.5);
    double i = i_index(loop);
    CHECK(std::abs(i - std::round(i)) < 1e-9);
    auto rep = integrality_conditions(loop);
    CHECK(rep.i_forced_integral);
    CHECK(rep.i_residual_int < 1e-9);
  }
}

TEST_CASE("angle function is continuous and starts on the canonical branch") {
  std::mt19937_64 rng(9);
  auto c = oracle::random_loop(rng, {0.0, 0.0}, 1.0);
  auto a = angle_function(c);
  CHECK(a.theta.front() >= 0.0);
  CHECK(a.theta.front() < 2.0 * kPi);
  for (std::size_t k = 0; k + 1 < a.theta.size(); ++k)
    CHECK(std::abs(a.theta[k + 1] - a.theta[k]) < 0.5 * kPi);
  CHECK(std::abs((a.at_end() - a.at_start()) / (2.0 * kPi) - i_index(c)) < 1e-12);
  CHECK(std::abs(j_index(a) - j_index(c)) < 1e-12);

  auto shifted = angle_function(c, 3);
  CHECK(std::abs(shifted.at_start() - a.at_start() - 6.0 * kPi) < 1e-12);
}

TEST_CASE("validation rejects broken sample data") {
  auto c = make_circle({0.0, 0.0}, 1.0, 1, 0.0, 256);
  CHECK(validate_regular(c).ok);

  auto zero_speed = c;
  zero_speed.vel[10] = {0.0, 0.0};
  CHECK_FALSE(validate_regular(zero_speed).ok);
  CHECK_THROWS_AS(require_valid(zero_speed), Error);

  auto bad_param = c;
  bad_param.u[5] = bad_param.u[7];
  CHECK_FALSE(validate_regular(bad_param).ok);

  auto sharp = make_segment({0.0, 0.0}, {1.0, 0.0}, 8);
  sharp.vel[4] = {-1.0, 0.1};
  CHECK_FALSE(validate_regular(sharp).ok);
}

TEST_CASE("inserted kinks change the turning index by one") {
  auto c = make_circle({0.0, 0.0}, 1.0);
  double mid = 0.5 * (c.u.front() + c.u.back());

  auto plus = insert_kink(c, mid, +1, 0.1);
  CHECK(validate_regular(plus).ok);
  CHECK(std::abs(i_index(plus) - 2.0) < 1e-9);
  CHECK(norm(plus.pos.front() - c.pos.front()) < 1e-12);
  CHECK(norm(plus.pos.back() - c.pos.back()) < 1e-12);

  auto minus = insert_kink(c, mid, -1, 0.1);
  CHECK(validate_regular(minus).ok);
  CHECK(std::abs(i_index(minus)) < 1e-9);

  auto open_arc = make_arc({0.0, 0.0}, 1.0, 0.0, 1.5);
  auto kinked = insert_kink(open_arc, 0.7, -1, 0.05);
  CHECK(validate_regular(kinked).ok);
  CHECK(std::abs(i_index(kinked) - i_index(open_arc) + 1.0) < 1e-9);
}

TEST_CASE("reversal negates the turning index") {
  std::mt19937_64 rng(17);
  auto c = oracle::random_loop(rng, {0.0, 0.0}, 1.0);
  auto r = reverse_curve(c);
  CHECK(validate_regular(r).ok);
  CHECK(std::abs(i_index(r) + i_index(c)) < 1e-9);
  CHECK(norm(r.pos.front() - c.pos.back()) == 0.0);
}

TEST_CASE("evaluation interpolates through the samples") {
  auto c = make_circle({2.0, 1.0}, 0.5, 1, 0.3, 512);
  for (std::size_t k = 0; k < c.size(); k += 61) {
    CHECK(norm(eval_pos(c, c.u[k]) - c.pos[k]) < 1e-12);
    CHECK(norm(eval_vel(c, c.u[k]) - c.vel[k]) < 1e-12);
  }
  double um = 0.5 * (c.u[100] + c.u[101]);
  CHECK(norm(eval_pos(c, um) - Vec2{2.0, 1.0}) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("arclength resampling preserves length and normalizes speed") {
  std::mt19937_64 rng(31);
  auto c = oracle::random_loop(rng, {0.0, 0.0}, 1.0);
  double len = curve_length(c);
  auto r = resample_arclength(c, 2000);
  CHECK(r.size() == 2000);
  CHECK(std::abs(curve_length(r) - len) < 1e-4 * len);
  CHECK(std::abs(r.u.back() - r.u.front() - len) < 1e-4 * len);
  for (std::size_t k = 0; k < r.size(); k += 101)
    CHECK(std::abs(norm(r.vel[k]) - 1.0) < 1e-3);
  CHECK(std::abs(i_index(r) - i_index(c)) < 1e-6);
}

TEST_CASE("slicing restricts to a parameter window") {
  auto c = make_arc({0.0, 0.0}, 1.0, 0.0, 2.0, 1024);
  auto s = slice(c, 0.5, 1.5, 256);
  CHECK(s.size() == 256);
  CHECK(s.u.front() == doctest::Approx(0.5));
  CHECK(s.u.back() == doctest::Approx(1.5));
  CHECK(norm(s.pos.front() - eval_pos(c, 0.5)) < 1e-9);
  CHECK(norm(s.pos.back() - eval_pos(c, 1.5)) < 1e-9);
}

TEST_CASE("concatenation needs a matching junction") {
  auto a = make_segment({0.0, 0.0}, {1.0, 0.0});
  auto b = make_segment({1.0, 0.0}, {2.0, 0.0});
  auto ab = concat(a, b);
  CHECK(ab.size() == a.size() + b.size() - 1);
  CHECK(std::abs(curve_length(ab) - 2.0) < 1e-9);

  auto up = make_segment({1.0, 0.0}, {1.0, 1.0});
  CHECK_THROWS_AS(concat(a, up), Error);
  auto far = make_segment({5.0, 0.0}, {6.0, 0.0});
  CHECK_THROWS_AS(concat(a, far), Error);
}

TEST_CASE("curves built from points recover smooth velocities") {
  std::size_t n = 2048;
  std::vector<double> u(n + 1);
  std::vector<Vec2> pos(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
    u[i] = t;
    pos[i] = {std::cos(t), std::sin(t)};
  }
  auto c = curve_from_points(u, pos, true);
  CHECK(validate_regular(c).ok);
  for (std::size_t k = 0; k < c.size(); k += 111) {
    Vec2 expect{-std::sin(c.u[k]), std::cos(c.u[k])};
    CHECK(norm(c.vel[k] - expect) < 1e-4);
  }
  CHECK(std::abs(i_index(c) - 1.0) < 1e-6);
}

TEST_CASE("mapping a curve through a rigid motion transforms velocities") {
  auto c = make_circle({0.0, 0.0}, 1.0, 1, 0.0, 512);
  Mat2 rot = rotation(0.7);
  auto m = mapped(
      c, [&](Vec2 p) { return rot * p + Vec2{3.0, -1.0}; },
      [&](Vec2) { return rot; });
  CHECK(validate_regular(m).ok);
  CHECK(std::abs(i_index(m) - 1.0) < 1e-9);
  CHECK(norm(m.pos.front() - (rot * c.pos.front() + Vec2{3.0, -1.0})) < 1e-12);
}

TEST_CASE("hermite curves hit prescribed ends and directions") {
  Vec2 p{0.0, 0.0}, q{3.0, 1.0};
  Vec2 dp = normalized(Vec2{1.0, 1.0}), dq = normalized(Vec2{1.0, -0.5});
  auto c = make_hermite(p, dp, q, dq, 2.0);
  CHECK(validate_regular(c).ok);
  CHECK(norm(c.pos.front() - p) < 1e-12);
  CHECK(norm(c.pos.back() - q) < 1e-12);
  CHECK(norm(c.front_dir() - dp) < 1e-9);
  CHECK(norm(c.back_dir() - dq) < 1e-9);
}

TEST_CASE("figure eight has total turning zero") {
  auto c = make_lemniscate({0.7, -0.2}, 0.3);
  CHECK(c.closed);
  CHECK(validate_regular(c).ok);
  CHECK(std::abs(i_index(c)) < 1e-9);
  CHECK(std::abs(oracle::turning_index(c)) < 1e-9);
}

TEST_CASE("quarter arc turns a quarter") {
  auto c = make_arc({0.0, 0.0}, 2.0, 0.25, 0.5 * kPi);
  CHECK(std::abs(i_index(c) - 0.25) < 1e-12);
  auto seg = make_segment({0.0, 0.0}, {1.0, 2.0});
  CHECK(std::abs(i_index(seg)) < 1e-12);
}

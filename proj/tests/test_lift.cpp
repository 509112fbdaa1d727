#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "surfwind/lift.hpp"

using namespace surfwind;

namespace {

double mod1(double x) { return x - std::floor(x); }

// straight cover path projected into the unit chart with wrap jumps
RegularCurve wrapped_line(Vec2 p0, Vec2 dir, double t1, std::size_t n,
                          bool wrap_y) {
  RegularCurve c;
  c.u.resize(n + 1);
  c.pos.resize(n + 1);
  c.vel.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    double t = t1 * static_cast<double>(i) / static_cast<double>(n);
    Vec2 p = p0 + dir * t;
    c.u[i] = t;
    c.pos[i] = {mod1(p.x), wrap_y ? mod1(p.y) : p.y};
    c.vel[i] = dir;
  }
  return c;
}

}  // namespace

TEST_CASE("lifting a wrapped line on the torus recovers the straight path") {
  auto s = make_torus();
  Vec2 p0{0.5, 0.5}, dir{2.0, 1.0};
  auto base = wrapped_line(p0, dir, 1.0, 2000, true);
  auto lift = lift_path(s, base, p0);

  for (std::size_t k = 0; k < lift.cover.size(); k += 333) {
    Vec2 expect = p0 + dir * lift.cover.u[k];
    CHECK(norm(lift.cover.pos[k] - expect) < 1e-9);
  }
  CHECK(norm(lift.end() - Vec2{2.5, 1.5}) < 1e-9);
  CHECK(norm(apply(lift.terminal, p0) - lift.end()) < 1e-9);
  CHECK(word_equal(class_word(lift), parse_word("a^2.b")));
  CHECK(is_regularly_closed(lift));
  CHECK_FALSE(is_null_class(lift));
}

TEST_CASE("lifting on the cylinder and the moebius band") {
  auto cyl = make_cylinder();
  Vec2 p0{0.25, 0.4}, dir{1.0, 0.0};
  auto base = wrapped_line(p0, dir, 3.0, 1500, false);
  auto lift = lift_path(cyl, base, p0);
  CHECK(norm(lift.end() - Vec2{3.25, 0.4}) < 1e-9);
  CHECK(word_equal(class_word(lift), parse_word("a^3")));

  auto mo = make_moebius();
  RegularCurve core;
  std::size_t n = 600;
  core.u.resize(n + 1);
  core.pos.resize(n + 1);
  core.vel.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    double t = static_cast<double>(i) / static_cast<double>(n);
    core.u[i] = t;
    core.pos[i] = {mod1(t), 0.0};
    core.vel[i] = {1.0, 0.0};
  }
  auto mlift = lift_path(mo, core, {0.0, 0.0});
  CHECK(norm(mlift.end() - Vec2{1.0, 0.0}) < 1e-9);
  CHECK(word_equal(class_word(mlift), parse_word("g")));
  CHECK(orientation_sign(mlift.terminal) == -1);
  CHECK(is_regularly_closed(mlift));
}

TEST_CASE("null classes are recognized") {
  auto s = make_torus();
  auto circle = make_circle({0.5, 0.5}, 0.2);
  auto lift = lift_given(s, circle, {});
  CHECK(is_null_class(lift));
  CHECK(is_regularly_closed(lift));
  CHECK(class_word(lift).empty());
}

TEST_CASE("given lifts validate their stated class") {
  auto s = make_torus();
  auto seg = make_segment({0.2, 0.2}, {1.2, 0.2}, 128);
  auto ok = lift_given(s, seg, parse_word("a"));
  CHECK(isometry_equal(ok.terminal, generator(s, "a")));

  CHECK_THROWS_AS(lift_given(s, seg, parse_word("b")), Error);
  CHECK_THROWS_AS(lift_given(s, seg, parse_word("a^2")), Error);

  auto mo = make_moebius();
  auto high = make_segment({0.0, 1.4}, {1.0, 1.4}, 64);
  CHECK_THROWS_AS(lift_given(mo, high, parse_word("g")), Error);
}

TEST_CASE("regular closure needs matching end directions") {
  auto s = make_torus();
  auto seg = make_segment({0.0, 0.0}, {1.0, 0.0}, 128);
  auto lift = lift_given(s, seg, parse_word("a"));
  CHECK(is_regularly_closed(lift));
  require_regularly_closed(lift);

  auto bent = seg;
  bent.vel.back() = normalized(Vec2{1.0, 0.2});
  auto blift = lift_given(s, bent, parse_word("a"));
  CHECK_FALSE(is_regularly_closed(blift));
  CHECK_THROWS_AS(require_regularly_closed(blift), Error);

  auto open_arc = make_arc({0.5, 0.5}, 0.2, 0.0, 1.0);
  CHECK_THROWS_AS(lift_given(s, open_arc, {}), Error);
}

TEST_CASE("deck elements are found from orbit pairs") {
  auto s = make_klein();
  Vec2 p{0.3, 0.4};
  auto w = parse_word("a.b^2");
  Vec2 q = apply(word_isometry(s, w), p);
  auto deck = deck_taking(s, p, q);
  REQUIRE(deck.has_value());
  CHECK(isometry_equal(*deck, word_isometry(s, w)));

  auto none = deck_taking(s, p, p + Vec2{0.5, 0.0});
  CHECK_FALSE(none.has_value());

  auto self = deck_taking(s, p, p);
  REQUIRE(self.has_value());
  CHECK(is_identity(*self));

  auto mo = make_moebius();
  Vec2 mp{0.2, 0.3};
  Vec2 mq = apply(word_isometry(mo, parse_word("g^3")), mp);
  auto mdeck = deck_taking(mo, mp, mq);
  REQUIRE(mdeck.has_value());
  CHECK(isometry_equal(*mdeck, word_isometry(mo, parse_word("g^3"))));
}

TEST_CASE("deck words invert the flat terminal elements") {
  auto s = make_klein();
  for (const char* text : {"a", "b", "a^2.b", "b^-3", "a^-1.b^2"}) {
    auto w = parse_word(text);
    auto t = word_isometry(s, w);
    auto back = deck_word_of(s, t);
    CHECK(isometry_equal(word_isometry(s, back), t));
  }
}

TEST_CASE("transforming a lift conjugates the terminal element") {
  auto s = make_torus();
  auto seg = make_segment({0.2, 0.2}, {1.2, 1.2}, 128);
  auto lift = lift_given(s, seg, parse_word("a.b"));

  auto S = word_isometry(s, parse_word("b^2"));
  auto moved = transform_lift(lift, S);
  CHECK(norm(moved.base() - apply(S, lift.base())) < 1e-12);
  auto expect = compose(S, compose(lift.terminal, invert(S)));
  CHECK(isometry_equal(moved.terminal, expect));
  CHECK(is_regularly_closed(moved));

  auto k = make_klein();
  auto kseg = make_segment({0.3, 0.0}, {0.3, 2.0}, 256);
  auto klift = lift_given(k, kseg, parse_word("b^2"));
  auto kmoved = transform_lift(klift, generator(k, "b"));
  auto kexpect = compose(generator(k, "b"),
                         compose(klift.terminal, invert(generator(k, "b"))));
  CHECK(isometry_equal(kmoved.terminal, kexpect));
}

TEST_CASE("coarse sampling across a seam is rejected") {
  auto s = make_torus();
  RegularCurve c;
  c.u = {0.0, 0.5};
  c.pos = {{0.9, 0.5}, {0.4, 1.0}};
  c.vel = {{0.0, 1.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(lift_path(s, c, {0.9, 0.5}), Error);
}

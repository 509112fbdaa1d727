#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "surfwind/winding.hpp"

using namespace surfwind;

namespace {

LiftedCurve kinked_loop(const SurfaceModel& s, const GroupWord& w, Vec2 hint,
                        int sign, double radius = 0.2) {
  auto geo = closed_geodesic(s, w, hint);
  double mid = 0.5 * (geo.cover.u.front() + geo.cover.u.back());
  return lift_given(s, insert_kink(geo.cover, mid, sign, radius), w);
}

}  // namespace

TEST_CASE("winding values snap, compare and print") {
  auto v = integer_value(2.0000001, 1e-5);
  CHECK(v.kind == ValueKind::Integer);
  CHECK(v.value == 2);
  CHECK_THROWS_AS(integer_value(0.5, 1e-6), Error);

  auto p = mod2_value(-3.0, 1e-6);
  CHECK(p.kind == ValueKind::Mod2);
  CHECK(p.value == 1);
  CHECK(winding_equal(p, mod2_value(5.0, 1e-6)));
  CHECK_FALSE(winding_equal(p, mod2_value(4.0, 1e-6)));
  CHECK_FALSE(winding_equal(p, integer_value(1.0, 1e-6)));

  CHECK(scale_winding(integer_value(3.0, 1e-6), -1).value == -3);
  CHECK(scale_winding(integer_value(3.0, 1e-6), 1).value == 3);
  CHECK(scale_winding(p, -1).value == p.value);

  CHECK(winding_to_string(v) == "2");
  CHECK(winding_to_string(p) == "1 (mod 2)");
}

TEST_CASE("external angles refuse the straight guard band") {
  CHECK(std::abs(external_angle({1.0, 0.0}, {0.0, 1.0}) - 0.5 * kPi) < 1e-12);
  CHECK(std::abs(external_angle({1.0, 0.0}, {0.0, -1.0}) + 0.5 * kPi) < 1e-12);
  CHECK(external_angle({1.0, 0.0}, {1.0, 0.0}) == 0.0);
  CHECK_THROWS_AS(external_angle({1.0, 0.0}, {-1.0, 1e-8}), Error);
  CHECK_THROWS_AS(external_angle({1.0, 0.0}, {-1.0, -1e-8}), Error);
}

TEST_CASE("null classes wind by their turning index") {
  auto s = make_torus();
  auto circle = lift_given(s, make_circle({0.5, 0.5}, 0.2), {});
  auto w = based_winding_number(circle);
  CHECK(w.kind == ValueKind::Integer);
  CHECK(w.value == 1);

  auto cw = lift_given(s, make_circle({0.5, 0.5}, 0.2, -1), {});
  CHECK(based_winding_number(cw).value == -1);

  auto f8 = figure_eight_in_disc(s, {0.5, 0.5}, 0.2);
  CHECK(based_winding_number(f8).value == 0);

  auto dbl = lift_given(s, make_circle({0.5, 0.5}, 0.2, 2), {});
  CHECK(based_winding_number(dbl).value == 2);
}

TEST_CASE("geodesic and horocycle loops have winding zero") {
  auto torus = closed_geodesic(make_torus(), parse_word("a.b"), {0.3, 0.4});
  CHECK(based_winding_number(torus).value == 0);

  auto cyl = closed_geodesic(make_cylinder(), parse_word("a^2"), {0.1, 0.7});
  CHECK(based_winding_number(cyl).value == 0);

  auto ktrans = closed_geodesic(make_klein(), parse_word("b^2"), {0.3, 0.1});
  auto wt = based_winding_number(ktrans);
  CHECK(wt.kind == ValueKind::Integer);
  CHECK(wt.value == 0);

  auto kglide = closed_geodesic(make_klein(), parse_word("b"), {0.3, 0.1});
  auto wg = based_winding_number(kglide);
  CHECK(wg.kind == ValueKind::Mod2);
  CHECK(wg.value == 0);

  auto s = make_hyperbolic({{"b", mobius_isometry(2.0, 1.0, 1.0, 1.0)},
                            {"c", mobius_isometry(1.0, 1.0, 0.0, 1.0)}});
  auto axis = closed_geodesic(s, parse_word("b"), {0.5, 1.0});
  CHECK(based_winding_number(axis).value == 0);

  auto horo = horocycle_loop(s, parse_word("c"), 0.0, 1.0);
  CHECK(based_winding_number(horo).value == 0);
}

TEST_CASE("the moebius core has parity zero and its double kinks to one") {
  auto mo = make_moebius();
  auto core = closed_geodesic(mo, parse_word("g"), {0.0, 0.0});
  auto w = based_winding_number(core);
  CHECK(w.kind == ValueKind::Mod2);
  CHECK(w.value == 0);

  auto triple = closed_geodesic(mo, parse_word("g^3"), {0.5, 0.0});
  CHECK(based_winding_number(triple).kind == ValueKind::Mod2);
  CHECK(based_winding_number(triple).value == 0);

  auto plus = kinked_loop(mo, parse_word("g^2"), {0.0, 0.0}, +1);
  auto wp = based_winding_number(plus);
  CHECK(wp.kind == ValueKind::Integer);
  CHECK(wp.value == 1);

  auto minus = kinked_loop(mo, parse_word("g^2"), {0.0, 0.0}, -1);
  CHECK(based_winding_number(minus).value == -1);
}

TEST_CASE("changing the lift scales by the orientation sign of the deck word") {
  auto mo = make_moebius();
  auto plus = kinked_loop(mo, parse_word("g^2"), {0.0, 0.0}, +1);
  auto w = based_winding_number(plus);
  for (const char* text : {"g", "g^-1", "g^2", "g^3"}) {
    auto x = parse_word(text);
    auto moved = winding_at_other_lift(plus, x);
    CHECK(winding_equal(moved, scale_winding(w, word_sign(mo, x))));
  }

  auto k = make_klein();
  auto kinked = kinked_loop(k, parse_word("b^2"), {0.3, 0.1}, -1);
  auto wk = based_winding_number(kinked);
  CHECK(wk.value == -1);
  for (const char* text : {"a", "b", "a.b", "b^-1.a^2", "a^-3.b^2"}) {
    auto x = parse_word(text);
    auto moved = winding_at_other_lift(kinked, x);
    CHECK(winding_equal(moved, scale_winding(wk, word_sign(k, x))));
  }

  auto core = closed_geodesic(mo, parse_word("g"), {0.0, 0.0});
  auto wcore = based_winding_number(core);
  CHECK(winding_equal(winding_at_other_lift(core, parse_word("g")), wcore));
}

TEST_CASE("rotating the base direction preserves the based winding") {
  auto s = make_torus();
  auto circle = lift_given(s, make_circle({0.5, 0.5}, 0.2), {});
  auto w0 = based_winding_number(circle);
  for (double alpha : {0.3, -0.8, 2.0}) {
    auto rotated = rotate_base_lift(circle, alpha);
    CHECK(is_regularly_closed(rotated));
    CHECK(winding_equal(based_winding_number(rotated), w0));
  }

  auto kinked = kinked_loop(make_klein(), parse_word("b^2"), {0.3, 0.1}, +1);
  auto wk = based_winding_number(kinked);
  for (double alpha : {0.4, -1.1}) {
    auto rotated = rotate_base_lift(kinked, alpha);
    CHECK(winding_equal(based_winding_number(rotated), wk));
  }

  auto uhp = make_hyperbolic({{"c", mobius_isometry(1.0, 1.0, 0.0, 1.0)}});
  auto disc = lift_given(uhp, make_circle({0.0, 2.0}, 0.3), {});
  auto wu = based_winding_number(disc);
  auto rotated = rotate_base_lift(disc, 0.9);
  CHECK(winding_equal(based_winding_number(rotated), wu));
}

TEST_CASE("carrying the base preserves the based winding at the new base") {
  auto mo = make_moebius();
  auto plus = kinked_loop(mo, parse_word("g^2"), {0.0, 0.0}, +1);
  auto w = based_winding_number(plus);

  auto carried = finger_move(plus, make_segment({0.0, 0.0}, {1.0, 0.0}));
  CHECK(norm(carried.base() - Vec2{1.0, 0.0}) < 1e-9);
  CHECK(winding_equal(based_winding_number(carried), w));

  // the new base is the g-image of the old one, so re-anchoring the carried
  // curve at the original fiber point flips the sign
  auto back = transform_lift(carried, invert(generator(mo, "g")));
  CHECK(norm(back.base() - plus.base()) < 1e-9);
  auto wb = based_winding_number(back);
  CHECK(wb.value == -w.value);

  CHECK_THROWS_AS(finger_move(plus, make_segment({0.3, 0.0}, {1.0, 0.0})), Error);
  CHECK_THROWS_AS(finger_move(plus, make_segment({0.0, 0.0}, {0.0, 0.9})), Error);

  auto core = closed_geodesic(mo, parse_word("g"), {0.0, 0.0});
  CHECK_THROWS_AS(finger_move(core, make_segment({0.0, 0.0}, {0.5, 0.0})), Error);

  auto uhp = make_hyperbolic({{"c", mobius_isometry(1.0, 1.0, 0.0, 1.0)}});
  auto disc = lift_given(uhp, make_circle({0.0, 2.0}, 0.3), {});
  auto moved = finger_move(disc, make_segment({0.3, 2.0}, {1.0, 4.0}));
  CHECK(norm(moved.base() - Vec2{1.0, 4.0}) < 1e-9);
  CHECK(winding_equal(based_winding_number(moved), based_winding_number(disc)));

  auto uhp2 = make_hyperbolic({{"b", mobius_isometry(2.0, 1.0, 1.0, 1.0)}});
  auto nonnull = closed_geodesic(uhp2, parse_word("b"), {0.5, 1.0});
  auto away = make_segment(nonnull.base(), nonnull.base() + Vec2{0.1, 0.1});
  CHECK_THROWS_AS(finger_move(nonnull, away), Error);
}

TEST_CASE("reversibility of classes") {
  auto k = make_klein();
  CHECK(is_reversible(k, parse_word("")) == Reversibility::Yes);
  CHECK(is_reversible(k, parse_word("b")) == Reversibility::Yes);
  CHECK(is_reversible(k, parse_word("a.b")) == Reversibility::Yes);
  CHECK(is_reversible(k, parse_word("b^2")) == Reversibility::Yes);
  CHECK(is_reversible(k, parse_word("a")) == Reversibility::No);
  CHECK(is_reversible(k, parse_word("a.b^2")) == Reversibility::No);
  CHECK(is_reversible(k, parse_word("a^-2.b^4")) == Reversibility::No);

  auto mo = make_moebius();
  CHECK(is_reversible(mo, parse_word("g")) == Reversibility::Yes);
  CHECK(is_reversible(mo, parse_word("g^2")) == Reversibility::Yes);

  CHECK(is_reversible(make_torus(), parse_word("a")) == Reversibility::Unsupported);

  double r = std::sqrt(2.0);
  auto glide = mobius_isometry(r, 0.0, 0.0, 1.0 / r, true);
  auto s = make_hyperbolic(
      {{"a", glide}, {"b", mobius_isometry(2.0, 1.0, 1.0, 1.0)}});
  CHECK(is_reversible(s, parse_word("a^2")) == Reversibility::Yes);
  CHECK(is_reversible(s, parse_word("b")) == Reversibility::No);
  CHECK(is_reversible(s, parse_word("a.b.a^-1.b")) == Reversibility::No);
  CHECK(is_reversible(s, parse_word("a.b.a.b")) == Reversibility::Yes);
  CHECK(is_reversible(s, parse_word("a.b.a^-1")) == Reversibility::No);
  CHECK(is_reversible(s, parse_word("a.b.a^-1.b^-1")) == Reversibility::No);
  CHECK(is_reversible(s, parse_word("b.a.b")) == Reversibility::Yes);
  CHECK(is_reversible(s, parse_word("a^3")) == Reversibility::Yes);

  auto closed = make_hyperbolic({{"a", glide}}, false);
  CHECK(is_reversible(closed, parse_word("a^2")) == Reversibility::Unsupported);
}

TEST_CASE("free winding picks the rule from surface and class") {
  auto torus = make_torus();
  auto circle = lift_given(torus, make_circle({0.5, 0.5}, 0.2), {});
  auto f1 = free_winding_number(circle);
  CHECK(f1.rule == FreeRule::OrientableInteger);
  CHECK(f1.value.value == 1);

  auto mo = make_moebius();
  auto core = closed_geodesic(mo, parse_word("g"), {0.0, 0.0});
  auto f2 = free_winding_number(core);
  CHECK(f2.rule == FreeRule::ReversingMod2);
  CHECK(f2.value.kind == ValueKind::Mod2);
  CHECK(f2.value.value == 0);

  auto plus = kinked_loop(mo, parse_word("g^2"), {0.0, 0.0}, +1);
  auto minus = kinked_loop(mo, parse_word("g^2"), {0.0, 0.0}, -1);
  auto f3p = free_winding_number(plus);
  auto f3m = free_winding_number(minus);
  CHECK(f3p.rule == FreeRule::ReversibleAbsolute);
  CHECK(f3p.value.kind == ValueKind::NonNegInteger);
  CHECK(f3p.value.value == 1);
  CHECK(winding_equal(f3p.value, f3m.value));

  auto k = make_klein();
  auto anchored_class = kinked_loop(k, parse_word("a.b^2"), {0.2, 0.3}, +1);
  CHECK_THROWS_AS(free_winding_number(anchored_class), Error);

  auto gamma0 = closed_geodesic(k, parse_word("a.b^2"), {0.2, 0.3});
  FreeReference ref{gamma0, std::nullopt};
  auto f4 = free_winding_number(anchored_class, ref);
  CHECK(f4.rule == FreeRule::TraceAnchored);
  CHECK(f4.value.kind == ValueKind::Integer);
  CHECK(f4.value.value == 1);
}

TEST_CASE("trace anchoring moves the curve into the reference fiber") {
  auto k = make_klein();
  Vec2 p0{0.2, 0.3}, q0{0.45, 0.3};
  auto gamma0 = closed_geodesic(k, parse_word("a.b^2"), p0);
  auto c = kinked_loop(k, parse_word("a.b^2"), q0, +1);

  FreeReference ref{gamma0, make_segment(p0, q0)};
  auto f = free_winding_number(c, ref);
  CHECK(f.rule == FreeRule::TraceAnchored);
  CHECK(f.value.value == 1);

  // a reference translated by the reversing generator anchors the same curve
  // with the opposite sign
  auto b = generator(k, "b");
  FreeReference moved_ref{transform_lift(gamma0, b),
                          make_segment(apply(b, p0), apply(b, q0))};
  auto g = free_winding_number(c, moved_ref);
  CHECK(g.rule == FreeRule::TraceAnchored);
  CHECK(g.value.value == -1);

  // trace must start at the reference base
  FreeReference bad_start{gamma0, make_segment(q0, q0 + Vec2{0.1, 0.0})};
  CHECK_THROWS_AS(free_winding_number(c, bad_start), Error);

  // trace ending off the fiber of the curve base
  FreeReference off{gamma0, make_segment(p0, q0 + Vec2{0.37, 0.0})};
  CHECK_THROWS_AS(free_winding_number(c, off), Error);

  // reference in a different class
  auto wrong = closed_geodesic(k, parse_word("a^2.b^2"), p0);
  FreeReference wrong_ref{wrong, make_segment(p0, q0)};
  CHECK_THROWS_AS(free_winding_number(c, wrong_ref), Error);
}

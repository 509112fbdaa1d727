#include "surfwind/winding.hpp"

#include <cmath>

#include "surfwind/twist.hpp"

namespace surfwind {

WindingValue integer_value(double raw, double tol_int) {
  double snapped = std::round(raw);
  if (std::abs(raw - snapped) > tol_int)
    throw Error(ErrorCode::NonIntegral,
                "value " + std::to_string(raw) +
                    " is not within tolerance of an integer");
  WindingValue v;
  v.kind = ValueKind::Integer;
  v.value = static_cast<long long>(snapped);
  v.raw = raw;
  return v;
}

WindingValue mod2_value(double raw, double tol_int) {
  WindingValue v = integer_value(raw, tol_int);
  v.kind = ValueKind::Mod2;
  v.value = ((v.value % 2) + 2) % 2;
  return v;
}

WindingValue scale_winding(const WindingValue& v, int sign) {
  if (sign >= 0 || v.kind != ValueKind::Integer) return v;
  WindingValue out = v;
  out.value = -v.value;
  out.raw = -v.raw;
  return out;
}

bool winding_equal(const WindingValue& x, const WindingValue& y) {
  if (x.kind != y.kind) return false;
  if (x.kind == ValueKind::Mod2)
    return ((x.value % 2) + 2) % 2 == ((y.value % 2) + 2) % 2;
  return x.value == y.value;
}

std::string winding_to_string(const WindingValue& v) {
  switch (v.kind) {
    case ValueKind::Integer:
      return std::to_string(v.value);
    case ValueKind::Mod2:
      return std::to_string(v.value) + " (mod 2)";
    case ValueKind::NonNegInteger:
      return "|" + std::to_string(v.value) + "|";
  }
  return "";
}

double external_angle(Vec2 incoming, Vec2 outgoing, double guard) {
  double chi = signed_angle(incoming, outgoing);
  if (std::abs(std::abs(chi) - kPi) < guard)
    throw Error(ErrorCode::StraightAngle,
                "turn at the base is within the guard band of a straight "
                "angle; its sign is not determined");
  return chi;
}

WindingValue based_winding_number(const LiftedCurve& c, const Tolerances& tol) {
  require_regularly_closed(c, tol);
  if (is_null_class(c)) return integer_value(i_index(c.cover), tol.integral);

  GeodesicSegment chord =
      shortest_geodesic(c.surface.geom, c.base(), c.end(), tol);
  Vec2 incoming = chord.end_dir();
  Vec2 outgoing = push_dir(c.terminal, c.base(), chord.start_dir());
  double chi = external_angle(incoming, outgoing);

  if (orientation_sign(c.terminal) > 0) {
    double raw = i_index(c.cover) - geodesic_i_index(chord) - chi / kTwoPi;
    return integer_value(raw, tol.integral);
  }
  double raw = j_index(c.cover) - geodesic_j_index(chord) - chi / kTwoPi;
  return mod2_value(raw, tol.integral);
}

WindingValue winding_at_other_lift(const LiftedCurve& c, const GroupWord& x,
                                   const Tolerances& tol) {
  Isometry s = word_isometry(c.surface, x);
  LiftedCurve moved = transform_lift(c, s);
  if (!moved.has_word && c.has_word) {
    moved.word = reduce_word(concat_words(concat_words(x, c.word), invert_word(x)));
    moved.has_word = true;
  }
  return based_winding_number(moved, tol);
}

LiftedCurve rotate_base_lift(const LiftedCurve& c, double alpha,
                             double collar_radius, const Tolerances& tol) {
  require_regularly_closed(c, tol);
  int eps = orientation_sign(c.terminal);
  bool null_class = is_null_class(c);

  double radius = collar_radius;
  if (!null_class) {
    double gap = norm(c.end() - c.base());
    radius = std::min(radius, 0.45 * gap);
  }
  if (c.surface.geom == Geometry::HyperbolicUHP)
    radius = std::min(radius, 0.9 * std::min(c.base().y, c.end().y));
  if (radius <= 0.0)
    throw Error(ErrorCode::InvalidInput, "no room for a rotation collar");

  RadialTwist start_twist{c.base(), radius, alpha};
  RadialTwist end_twist{c.end(), radius, eps * alpha};

  LiftedCurve out;
  out.surface = c.surface;
  out.terminal = c.terminal;
  out.word = c.word;
  out.has_word = c.has_word;
  if (null_class) {
    out.cover = mapped(
        c.cover, [&](Vec2 p) { return start_twist.map(p); },
        [&](Vec2 p) { return start_twist.jacobian(p); });
  } else {
    out.cover = mapped(
        c.cover, [&](Vec2 p) { return end_twist.map(start_twist.map(p)); },
        [&](Vec2 p) {
          return end_twist.jacobian(start_twist.map(p)) *
                 start_twist.jacobian(p);
        });
  }
  for (std::size_t k = 0; k < out.cover.size(); ++k) {
    if (!in_domain(c.surface, out.cover.pos[k]))
      throw Error(ErrorCode::OutOfDomain,
                  "rotation collar pushes the lift out of the cover domain");
  }
  require_regularly_closed(out, tol);
  return out;
}

LiftedCurve finger_move(const LiftedCurve& c, const RegularCurve& carry_path,
                        const Tolerances& tol) {
  require_regularly_closed(c, tol);
  if (carry_path.size() < 2)
    throw Error(ErrorCode::InvalidInput, "carry path needs >= 2 samples");
  if (norm(carry_path.pos.front() - c.base()) > tol.pos)
    throw Error(ErrorCode::BasePointMismatch,
                "carry path must start at the base lift of the curve");
  for (std::size_t k = 0; k < carry_path.size(); ++k) {
    if (!in_domain(c.surface, carry_path.pos[k]))
      throw Error(ErrorCode::OutOfDomain, "carry path leaves the cover domain");
  }

  LiftedCurve out;
  out.surface = c.surface;
  out.terminal = c.terminal;
  out.word = c.word;
  out.has_word = c.has_word;

  if (c.surface.geom == Geometry::Euclidean) {
    const Mat2& m = c.terminal.rot;
    bool translation = std::abs(m.a - 1.0) <= 1e-12 &&
                       std::abs(m.b) <= 1e-12 && std::abs(m.c) <= 1e-12 &&
                       std::abs(m.d - 1.0) <= 1e-12;
    if (!translation)
      throw Error(ErrorCode::UnsupportedGeometry,
                  "base carrying over flat models needs a translation "
                  "terminal; glide classes are not supported");
    Vec2 shift = carry_path.pos.back() - carry_path.pos.front();
    out.cover = translate(c.cover, shift);
  } else {
    if (!is_null_class(c))
      throw Error(ErrorCode::UnsupportedGeometry,
                  "base carrying over the hyperbolic cover is supported for "
                  "null classes only");
    Vec2 from = c.base(), to = carry_path.pos.back();
    double lambda = to.y / from.y;
    double mu = to.x - lambda * from.x;
    double r = std::sqrt(lambda);
    Isometry m = mobius_isometry(r, mu / r, 0.0, 1.0 / r, false);
    out.cover = mapped(
        c.cover, [&](Vec2 p) { return apply(m, p); },
        [&](Vec2 p) { return differential(m, p); });
  }

  for (std::size_t k = 0; k < out.cover.size(); ++k) {
    if (!in_domain(c.surface, out.cover.pos[k]))
      throw Error(ErrorCode::OutOfDomain,
                  "carried curve leaves the cover domain");
  }
  require_regularly_closed(out, tol);
  return out;
}

Reversibility is_reversible(const SurfaceModel& s, const GroupWord& w) {
  if (orientable(s)) return Reversibility::Unsupported;
  switch (s.kind) {
    case SurfaceKind::Moebius:
      return Reversibility::Yes;
    case SurfaceKind::Klein: {
      auto [m, n] = klein_normal_form(w);
      if (((n % 2) + 2) % 2 == 1) return Reversibility::Yes;
      return m == 0 ? Reversibility::Yes : Reversibility::No;
    }
    case SurfaceKind::HyperbolicCustom: {
      if (!s.free_group) return Reversibility::Unsupported;
      GroupWord cyc = cyclic_reduce(reduce_word(w));
      if (cyc.empty()) return Reversibility::Yes;
      GroupWord root = primitive_root(cyc);
      return word_sign(s, root) < 0 ? Reversibility::Yes : Reversibility::No;
    }
    default:
      return Reversibility::Unsupported;
  }
}

FreeWinding free_winding_number(const LiftedCurve& c,
                                const std::optional<FreeReference>& ref,
                                const Tolerances& tol) {
  require_regularly_closed(c, tol);
  FreeWinding out;
  if (orientable(c.surface)) {
    out.rule = FreeRule::OrientableInteger;
    out.value = based_winding_number(c, tol);
    return out;
  }
  if (orientation_sign(c.terminal) < 0) {
    out.rule = FreeRule::ReversingMod2;
    out.value = based_winding_number(c, tol);
    return out;
  }

  Reversibility rev = is_reversible(c.surface, class_word(c));
  if (rev == Reversibility::Unsupported)
    throw Error(ErrorCode::UnsupportedReversibility,
                "cannot decide whether the class admits an "
                "orientation-reversing commuting element");
  if (rev == Reversibility::Yes) {
    WindingValue w = based_winding_number(c, tol);
    out.rule = FreeRule::ReversibleAbsolute;
    out.value.kind = ValueKind::NonNegInteger;
    out.value.value = std::llabs(w.value);
    out.value.raw = std::abs(w.raw);
    return out;
  }

  if (!ref)
    throw Error(ErrorCode::MissingReference,
                "free comparison in a non-reversible class needs a reference "
                "lift (and a trace to anchor against it)");
  LiftedCurve anchored = c;
  if (ref->trace) {
    const RegularCurve& tr = *ref->trace;
    if (tr.size() < 2 ||
        norm(tr.pos.front() - ref->gamma0.base()) > tol.pos)
      throw Error(ErrorCode::InvalidInput,
                  "trace must start at the base lift of the reference");
    Vec2 target = tr.pos.back();
    if (norm(target - c.base()) > tol.pos) {
      std::optional<Isometry> s =
          deck_taking(c.surface, c.base(), target, tol.pos);
      if (!s)
        throw Error(ErrorCode::TraceClassMismatch,
                    "trace endpoint does not sit over the curve base");
      anchored = transform_lift(c, *s);
      if (!anchored.has_word && c.has_word) {
        GroupWord x = deck_word_of(c.surface, *s);
        anchored.word = reduce_word(
            concat_words(concat_words(x, c.word), invert_word(x)));
        anchored.has_word = true;
      }
    }
  }
  if (!isometry_equal(anchored.terminal, ref->gamma0.terminal, 1e-9))
    throw Error(ErrorCode::TraceClassMismatch,
                "curve lift is not anchored to the reference: terminal "
                "elements differ");
  out.rule = FreeRule::TraceAnchored;
  out.value = based_winding_number(anchored, tol);
  return out;
}

}  // namespace surfwind

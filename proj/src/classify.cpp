#include "surfwind/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "surfwind/lift.hpp"

namespace surfwind {

namespace {

bool same_surface(const SurfaceModel& s1, const SurfaceModel& s2) {
  if (s1.kind != s2.kind || s1.geom != s2.geom) return false;
  if (s1.kind != SurfaceKind::HyperbolicCustom) return true;
  if (s1.generators.size() != s2.generators.size()) return false;
  for (std::size_t k = 0; k < s1.generators.size(); ++k) {
    if (s1.generators[k].first != s2.generators[k].first) return false;
    if (!isometry_equal(s1.generators[k].second, s2.generators[k].second))
      return false;
  }
  return s1.free_group == s2.free_group;
}

void require_comparable(const LiftedCurve& a, const LiftedCurve& b,
                        const Tolerances& tol) {
  if (!same_surface(a.surface, b.surface))
    throw Error(ErrorCode::InvalidInput, "curves live on different surfaces");
  require_regularly_closed(a, tol);
  require_regularly_closed(b, tol);
}

// expand to unit-exponent letters so rotations are letter granular
std::vector<Letter> unit_letters(const GroupWord& w) {
  std::vector<Letter> out;
  for (const Letter& l : w) {
    int n = std::abs(l.exp);
    int s = l.exp < 0 ? -1 : 1;
    for (int k = 0; k < n; ++k) out.push_back({l.gen, s});
  }
  return out;
}

std::string letters_to_key(const std::vector<Letter>& ls) {
  std::ostringstream os;
  for (std::size_t k = 0; k < ls.size(); ++k) {
    if (k) os << '.';
    os << ls[k].gen;
    if (ls[k].exp < 0) os << "'";
  }
  return os.str();
}

std::string free_group_key(const GroupWord& w) {
  GroupWord cyc = cyclic_reduce(reduce_word(w));
  std::vector<Letter> ls = unit_letters(cyc);
  if (ls.empty()) return "";
  std::string best;
  for (std::size_t r = 0; r < ls.size(); ++r) {
    std::rotate(ls.begin(), ls.begin() + 1, ls.end());
    std::string key = letters_to_key(ls);
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

}  // namespace

std::string conjugacy_key(const SurfaceModel& s, const GroupWord& w) {
  std::ostringstream os;
  switch (s.kind) {
    case SurfaceKind::Plane:
      return "";
    case SurfaceKind::Cylinder: {
      Isometry t = word_isometry(s, w);
      os << std::llround(t.shift.x);
      return os.str();
    }
    case SurfaceKind::Torus: {
      Isometry t = word_isometry(s, w);
      os << std::llround(t.shift.x) << ',' << std::llround(t.shift.y);
      return os.str();
    }
    case SurfaceKind::Moebius:
      os << moebius_power(w);
      return os.str();
    case SurfaceKind::Klein: {
      auto [m, n] = klein_normal_form(w);
      if (n % 2 == 0)
        os << std::llabs(m) << ',' << n;
      else
        os << ((m % 2) + 2) % 2 << ',' << n;
      return os.str();
    }
    case SurfaceKind::HyperbolicCustom:
      if (!s.free_group)
        throw Error(ErrorCode::UnsupportedGeometry,
                    "conjugacy in non-free deck groups is not supported");
      return free_group_key(w);
  }
  throw Error(ErrorCode::InvalidInput, "unknown surface kind");
}

BasedVerdict based_equivalent(const LiftedCurve& a, const LiftedCurve& b,
                              const Tolerances& tol) {
  require_comparable(a, b, tol);
  LiftedCurve anchored = b;
  if (norm(a.base() - b.base()) > tol.pos) {
    std::optional<Isometry> S = deck_taking(a.surface, b.base(), a.base(), tol.pos);
    if (!S)
      throw Error(ErrorCode::BasePointMismatch,
                  "loops are based at different surface points");
    anchored = transform_lift(b, *S);
  }
  BasedVerdict v;
  v.same_class = isometry_equal(a.terminal, anchored.terminal);
  v.w_first = based_winding_number(a, tol);
  v.w_second = based_winding_number(anchored, tol);
  v.equivalent = v.same_class && winding_equal(v.w_first, v.w_second);
  return v;
}

FreeVerdict freely_equivalent(const LiftedCurve& a, const LiftedCurve& b,
                              const std::optional<FreeReference>& ref,
                              const Tolerances& tol) {
  require_comparable(a, b, tol);
  FreeVerdict v;
  v.conjugate = conjugacy_key(a.surface, class_word(a)) ==
                conjugacy_key(b.surface, class_word(b));
  if (!v.conjugate) return v;
  v.w_first = free_winding_number(a, ref, tol);
  v.w_second = free_winding_number(b, ref, tol);
  v.equivalent = v.w_first->rule == v.w_second->rule &&
                 winding_equal(v.w_first->value, v.w_second->value);
  return v;
}

namespace {

template <class Eq>
std::vector<std::vector<std::size_t>> partition_by(std::size_t n, Eq&& eq) {
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < n; ++k) {
    bool placed = false;
    for (auto& g : groups) {
      if (eq(g.front(), k)) {
        g.push_back(k);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({k});
  }
  return groups;
}

}  // namespace

std::vector<std::vector<std::size_t>> classify_based(
    const std::vector<LiftedCurve>& curves, const Tolerances& tol) {
  return partition_by(curves.size(), [&](std::size_t i, std::size_t j) {
    return based_equivalent(curves[i], curves[j], tol).equivalent;
  });
}

std::vector<std::vector<std::size_t>> classify_free(
    const std::vector<LiftedCurve>& curves,
    const std::optional<FreeReference>& ref, const Tolerances& tol) {
  return partition_by(curves.size(), [&](std::size_t i, std::size_t j) {
    return freely_equivalent(curves[i], curves[j], ref, tol).equivalent;
  });
}

}  // namespace surfwind

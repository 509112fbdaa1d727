#include "surfwind/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>

#include "surfwind/kernels.hpp"
#include "surfwind/twist.hpp"

namespace surfwind {

namespace {

double smoothstep(double x) {
  x = std::clamp(x, 0.0, 1.0);
  return x * x * x * (x * (6.0 * x - 15.0) + 10.0);
}

double smoothstep_deriv(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return 30.0 * x * x * (x - 1.0) * (x - 1.0);
}

double min_speed_of(const RegularCurve& c) {
  double m = 1e300;
  for (const Vec2& v : c.vel) m = std::min(m, norm(v));
  return m;
}

double trapz(std::span<const double> u, std::span<const double> f) {
  std::vector<double> terms(u.size() - 1);
  for (std::size_t k = 0; k + 1 < u.size(); ++k)
    terms[k] = 0.5 * (f[k] + f[k + 1]) * (u[k + 1] - u[k]);
  return kernels::block_sum(terms);
}

// reparameterize to unit pace in place, without moving any samples
void unit_pace(RegularCurve& c) {
  double s = 0.0, prev = norm(c.vel.front());
  double u0 = c.u.front();
  c.u.front() = 0.0;
  c.vel.front() = c.vel.front() / prev;
  for (std::size_t k = 1; k < c.size(); ++k) {
    double sp = norm(c.vel[k]);
    s += 0.5 * (prev + sp) * (c.u[k] - u0);
    u0 = c.u[k];
    c.u[k] = s;
    c.vel[k] = c.vel[k] / sp;
    prev = sp;
  }
}

RegularCurve resample_valid(const RegularCurve& c, std::size_t n,
                            const Tolerances& tol) {
  for (int attempt = 0; attempt < 6; ++attempt) {
    RegularCurve r = resample_arclength(c, n);
    if (validate_regular(r, tol).ok) return r;
    n = 2 * n - 1;
  }
  RegularCurve r = resample_arclength(c, n);
  require_valid(r, tol);
  return r;
}

// carries the shared ends of the trimmed pair to (0,0) and (10,0) with
// horizontal end directions; a similarity followed by compactly supported
// twists at the two ends, inverted exactly
struct EndNormalizer {
  std::complex<double> scale;
  Vec2 p;
  RadialTwist t0, t1;

  Vec2 map(Vec2 z) const {
    std::complex<double> w = scale * (to_complex(z) - to_complex(p));
    return t1.map(t0.map(from_complex(w)));
  }
  Mat2 jacobian(Vec2 z) const {
    std::complex<double> w = scale * (to_complex(z) - to_complex(p));
    Vec2 m0 = from_complex(w);
    Mat2 sim{scale.real(), -scale.imag(), scale.imag(), scale.real()};
    return t1.jacobian(t0.map(m0)) * t0.jacobian(m0) * sim;
  }
  Vec2 unmap(Vec2 w) const {
    Vec2 z = t0.inverse().map(t1.inverse().map(w));
    std::complex<double> back = to_complex(z) / scale + to_complex(p);
    return from_complex(back);
  }
  Mat2 unjacobian(Vec2 w) const {
    Vec2 mid = t1.inverse().map(w);
    std::complex<double> inv = 1.0 / scale;
    Mat2 sim{inv.real(), -inv.imag(), inv.imag(), inv.real()};
    return sim * t0.inverse().jacobian(mid) * t1.inverse().jacobian(w);
  }
};

EndNormalizer make_normalizer(Vec2 p, Vec2 q, Vec2 dir_p, Vec2 dir_q) {
  EndNormalizer h;
  h.p = p;
  h.scale = 10.0 / (to_complex(q) - to_complex(p));
  Vec2 dp = from_complex(h.scale * to_complex(dir_p));
  Vec2 dq = from_complex(h.scale * to_complex(dir_q));
  h.t0 = RadialTwist{{0.0, 0.0}, 2.0, -angle_of(dp)};
  h.t1 = RadialTwist{{10.0, 0.0}, 2.0, -angle_of(dq)};
  return h;
}

// --- transverse spike, used to lengthen the shorter curve ------------------

struct SpikeWindow {
  double ua = 0.0, ub = 0.0;
  Vec2 ehat, nhat;
};

std::optional<SpikeWindow> find_spike_window(const RegularCurve& eta,
                                             double width, double cone) {
  double lo = eta.u.front() + 0.05 * (eta.u.back() - eta.u.front());
  double hi = eta.u.back() - 0.05 * (eta.u.back() - eta.u.front()) - width;
  if (hi <= lo) return std::nullopt;

  std::optional<SpikeWindow> best;
  double best_dev = 1e300;
  std::size_t step = std::max<std::size_t>(1, eta.size() / 512);
  for (std::size_t k = 0; k < eta.size(); k += step) {
    double ua = eta.u[k];
    if (ua < lo) continue;
    if (ua > hi) break;
    double ub = ua + width;
    Vec2 chord = eval_pos(eta, ub) - eval_pos(eta, ua);
    if (norm(chord) < 0.5 * width) continue;
    Vec2 ehat = normalized(chord);
    double dev = 0.0;
    for (std::size_t j = k; j < eta.size() && eta.u[j] <= ub; ++j)
      dev = std::max(dev, std::abs(signed_angle(normalized(eta.vel[j]), ehat)));
    if (dev < best_dev) {
      best_dev = dev;
      best = SpikeWindow{ua, ub, ehat, perp(ehat)};
    }
  }
  if (!best || best_dev > cone) return std::nullopt;
  return best;
}

RegularCurve apply_spike(const RegularCurve& eta, const SpikeWindow& w,
                         double amp, std::size_t n_window) {
  double mid = 0.5 * (w.ua + w.ub), half = 0.5 * (w.ub - w.ua);
  std::vector<double> grid;
  grid.reserve(eta.size() + n_window);
  for (double uu : eta.u)
    if (uu <= w.ua || uu >= w.ub) grid.push_back(uu);
  for (std::size_t k = 1; k + 1 < n_window; ++k)
    grid.push_back(w.ua + (w.ub - w.ua) * static_cast<double>(k) /
                              static_cast<double>(n_window - 1));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double a, double b) { return b - a < 1e-12; }),
             grid.end());

  RegularCurve out;
  out.closed = false;
  out.u = grid;
  out.pos.resize(grid.size());
  out.vel.resize(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    double uu = grid[k];
    Vec2 p = eval_pos(eta, uu), v = eval_vel(eta, uu);
    if (uu > w.ua && uu < w.ub) {
      double x = (uu - mid) / half;
      double b = (1.0 - x * x) * (1.0 - x * x);
      double db = -4.0 * x * (1.0 - x * x) / half;
      p = p + w.nhat * (amp * b);
      v = v + w.nhat * (amp * db);
    }
    out.pos[k] = p;
    out.vel[k] = v;
  }
  return out;
}

// --- squeeze toward the chord ----------------------------------------------

// scale the unit-speed curve by s about the origin and continue with a
// horizontal run to (10,0); stays unit speed, length 10 + s*(l-10)
RegularCurve squeeze_curve(const RegularCurve& eta, double s,
                           std::size_t n_tail) {
  double l = eta.u.back();
  RegularCurve out;
  out.closed = false;
  out.u.reserve(eta.size() + n_tail);
  out.pos.reserve(eta.size() + n_tail);
  out.vel.reserve(eta.size() + n_tail);
  for (std::size_t k = 0; k < eta.size(); ++k) {
    out.u.push_back(s * eta.u[k]);
    out.pos.push_back(eta.pos[k] * s);
    out.vel.push_back(eta.vel[k]);
  }
  double tail = 10.0 * (1.0 - s);
  if (tail > 1e-12) {
    double x0 = out.pos.back().x;
    for (std::size_t k = 1; k < n_tail; ++k) {
      double f = static_cast<double>(k) / static_cast<double>(n_tail - 1);
      out.u.push_back(s * l + tail * f);
      out.pos.push_back({x0 + (10.0 - x0) * f, 0.0});
      out.vel.push_back({1.0, 0.0});
    }
    out.pos.back() = {10.0, 0.0};
  }
  return out;
}

// --- direction blend with endpoint correction -------------------------------

double correction_bump(double s) {
  if (s <= 7.0 || s >= 9.0) return 0.0;
  double a = s - 7.0, b = 9.0 - s;
  return (15.0 / 16.0) * a * a * b * b;
}

struct BlendContext {
  std::vector<double> grid;
  std::vector<double> th1, th2;
  std::vector<double> psi;
  double psi_mass = 0.0;
};

BlendContext make_blend_context(const RegularCurve& sq1,
                                const RegularCurve& sq2) {
  BlendContext B;
  B.grid = sq1.u;
  AngleFunction a1 = angle_function(sq1), a2 = angle_function(sq2);
  B.th1 = a1.theta;
  B.th2 = a2.theta;
  for (double& t : B.th1) t -= a1.theta.front();
  for (double& t : B.th2) t -= a2.theta.front();
  // align the far branch exactly so the blended field ends horizontal
  double gap = B.th1.back() - B.th2.back();
  double l = B.grid.back();
  for (std::size_t k = 0; k < B.grid.size(); ++k)
    B.th2[k] += gap * (B.grid[k] / l);
  B.psi.resize(B.grid.size());
  for (std::size_t k = 0; k < B.grid.size(); ++k)
    B.psi[k] = correction_bump(B.grid[k]);
  B.psi_mass = trapz(B.grid, B.psi);
  return B;
}

RegularCurve blend_frame(const BlendContext& B, double t) {
  std::size_t n = B.grid.size();
  std::vector<double> vx(n), vy(n);
  for (std::size_t k = 0; k < n; ++k) {
    double phi = (1.0 - t) * B.th1[k] + t * B.th2[k];
    vx[k] = std::cos(phi);
    vy[k] = std::sin(phi);
  }
  Vec2 drift{trapz(B.grid, vx) - 10.0, trapz(B.grid, vy)};
  Vec2 fix = drift * (1.0 / B.psi_mass);
  RegularCurve out;
  out.closed = false;
  out.u = B.grid;
  out.vel.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    out.vel[k] = Vec2{vx[k], vy[k]} - fix * B.psi[k];
  std::vector<double> fx(n), fy(n), ix(n), iy(n);
  for (std::size_t k = 0; k < n; ++k) {
    fx[k] = out.vel[k].x;
    fy[k] = out.vel[k].y;
  }
  kernels::cumtrapz(B.grid, fx, ix);
  kernels::cumtrapz(B.grid, fy, iy);
  out.pos.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.pos[k] = {ix[k], iy[k]};
  return out;
}

// --- normalized-coordinate pipeline -----------------------------------------

struct NormPipeline {
  std::vector<RegularCurve> frames;
  std::vector<double> min_speed;
  std::vector<HomotopyStage> stages;
  double l1 = 0.0, l2 = 0.0;
  double spike_amp = 0.0, eps = 0.0, leps = 0.0;

  void stage(const std::string& name, std::vector<RegularCurve> fs) {
    if (fs.empty()) return;
    stages.push_back({name, frames.size(), frames.size() + fs.size() - 1});
    for (RegularCurve& f : fs) {
      min_speed.push_back(min_speed_of(f));
      frames.push_back(std::move(f));
    }
  }
};

struct SpikePlan {
  SpikeWindow window;
  double amp = 0.0;
  std::size_t n_window = 0;
};

SpikePlan plan_spike(const RegularCurve& eta, double target_len,
                     const SynthesisOptions& opt) {
  double l = eta.u.back();
  double deficit = target_len - l;
  double width = std::clamp(0.04 * l, 0.2, 4.0);
  std::optional<SpikeWindow> w;
  for (int tries = 0; tries < 4 && !w; ++tries) {
    w = find_spike_window(eta, width, opt.cone_limit);
    width *= 0.5;
  }
  if (!w)
    throw Error(ErrorCode::InvalidInput,
                "no straight enough span found to adjust the length on");

  SpikePlan plan;
  plan.window = *w;
  double half = 0.5 * (w->ub - w->ua);
  double guess = 0.5 * deficit + 1.0;
  plan.n_window = std::clamp<std::size_t>(
      static_cast<std::size_t>(64.0 * (guess / half + 1.0)) | 1, 1025, 400001);

  for (int attempt = 0; attempt < 4; ++attempt) {
    auto len = [&](double a) {
      return curve_length(apply_spike(eta, plan.window, a, plan.n_window));
    };
    double hi = 1.0;
    int grow = 0;
    while (len(hi) < target_len && grow++ < 60) hi *= 2.0;
    double lo = 0.0;
    for (int it = 0; it < 120; ++it) {
      double mid = 0.5 * (lo + hi);
      (len(mid) < target_len ? lo : hi) = mid;
    }
    plan.amp = 0.5 * (lo + hi);
    RegularCurve full = apply_spike(eta, plan.window, plan.amp, plan.n_window);
    if (validate_regular(full, opt.tol).ok) return plan;
    plan.n_window = 2 * plan.n_window - 1;
  }
  throw Error(ErrorCode::SamplingTooCoarse,
              "could not resolve the length-adjusting bump");
}

NormPipeline run_normalized(const RegularCurve& eta1, const RegularCurve& eta2,
                            const SynthesisOptions& opt) {
  NormPipeline P;
  P.l1 = eta1.u.back();
  P.l2 = eta2.u.back();
  double i1 = i_index(eta1), i2 = i_index(eta2);
  if (std::abs(i1 - i2) > opt.tol.integral)
    throw Error(ErrorCode::IndexMismatch,
                "turning indices differ; the curves are not regularly "
                "homotopic with these ends");

  std::size_t fps = std::max<std::size_t>(2, opt.frames_per_stage);
  std::size_t n_tail = std::max<std::size_t>(129, opt.samples / 8);

  // lengthen the shorter curve with a transverse bump until lengths agree
  bool spike_first = P.l1 + 1e-9 < P.l2;
  bool spike_second = P.l2 + 1e-9 < P.l1;
  RegularCurve work1 = eta1, work2 = eta2;
  std::vector<RegularCurve> spike_frames;
  if (spike_first || spike_second) {
    const RegularCurve& shorter = spike_first ? eta1 : eta2;
    double target = std::max(P.l1, P.l2);
    SpikePlan plan = plan_spike(shorter, target, opt);
    P.spike_amp = plan.amp;
    spike_frames.reserve(fps + 1);
    for (std::size_t k = 0; k <= fps; ++k) {
      double a = plan.amp * static_cast<double>(k) / static_cast<double>(fps);
      spike_frames.push_back(apply_spike(shorter, plan.window, a, plan.n_window));
    }
    (spike_first ? work1 : work2) = spike_frames.back();
  }
  if (spike_first) P.stage("lengthen", std::move(spike_frames));

  // matched uniform grids so direction fields can be blended indexwise
  std::size_t n_grid = opt.samples;
  bool gridded = false;
  for (int attempt = 0; attempt < 6 && !gridded; ++attempt) {
    RegularCurve r1 = resample_arclength(work1, n_grid);
    RegularCurve r2 = resample_arclength(work2, n_grid);
    if (validate_regular(r1, opt.tol).ok && validate_regular(r2, opt.tol).ok) {
      work1 = std::move(r1);
      work2 = std::move(r2);
      gridded = true;
    }
    n_grid = 2 * n_grid - 1;
  }
  if (!gridded)
    throw Error(ErrorCode::SamplingTooCoarse,
                "could not resolve both curves on a shared grid");

  double l = std::max(work1.u.back(), work2.u.back());
  P.eps = 0.1 / l;
  P.leps = 10.0 + P.eps * (l - 10.0);

  std::vector<RegularCurve> squeeze_frames;
  squeeze_frames.reserve(fps + 1);
  for (std::size_t k = 0; k <= fps; ++k) {
    double s = std::exp(std::log(P.eps) * static_cast<double>(k) /
                        static_cast<double>(fps));
    squeeze_frames.push_back(squeeze_curve(work1, s, n_tail));
  }
  RegularCurve sq1 = squeeze_frames.back();
  P.stage("squeeze", std::move(squeeze_frames));

  RegularCurve sq2 = squeeze_curve(work2, P.eps, n_tail);
  BlendContext B = make_blend_context(sq1, sq2);
  std::vector<RegularCurve> blend_frames;
  blend_frames.reserve(fps + 1);
  for (std::size_t k = 0; k <= fps; ++k)
    blend_frames.push_back(
        blend_frame(B, static_cast<double>(k) / static_cast<double>(fps)));
  P.stage("blend", std::move(blend_frames));

  std::vector<RegularCurve> unsqueeze_frames;
  unsqueeze_frames.reserve(fps + 1);
  for (std::size_t k = 0; k <= fps; ++k) {
    double s = std::exp(std::log(P.eps) *
                        static_cast<double>(fps - k) / static_cast<double>(fps));
    unsqueeze_frames.push_back(squeeze_curve(work2, s, n_tail));
  }
  P.stage("unsqueeze", std::move(unsqueeze_frames));

  if (spike_second) {
    std::reverse(spike_frames.begin(), spike_frames.end());
    P.stage("shorten", std::move(spike_frames));
  }
  return P;
}

// --- loop splicing -----------------------------------------------------------

void require_cone(Vec2 a, Vec2 b, double cone, const char* where) {
  if (std::abs(signed_angle(normalized(a), normalized(b))) > cone)
    throw Error(ErrorCode::InvalidInput,
                std::string("directions differ beyond the blend cone ") + where);
}

// rebuild the second loop so it runs along the first one inside the end
// collars, with smooth handoffs just inside them
RegularCurve graft_collars(const RegularCurve& c1, const RegularCurve& c2,
                           double w, double cone) {
  double len1 = c1.u.back(), len2 = c2.u.back();
  RegularCurve out;
  out.closed = true;
  out.u = c2.u;
  out.pos.resize(c2.size());
  out.vel.resize(c2.size());
  for (std::size_t k = 0; k < c2.size(); ++k) {
    double u = c2.u[k];
    Vec2 p, v;
    if (u <= w) {
      p = eval_pos(c1, u);
      v = eval_vel(c1, u);
    } else if (u < 2.0 * w) {
      double x = (u - w) / w;
      Vec2 pa = eval_pos(c1, u), va = eval_vel(c1, u);
      Vec2 pb = eval_pos(c2, u), vb = eval_vel(c2, u);
      require_cone(va, vb, cone, "inside the start collar");
      double bmix = smoothstep(x), dbmix = smoothstep_deriv(x) / w;
      p = pa * (1.0 - bmix) + pb * bmix;
      v = va * (1.0 - bmix) + vb * bmix + (pb - pa) * dbmix;
    } else if (u <= len2 - 2.0 * w) {
      p = eval_pos(c2, u);
      v = eval_vel(c2, u);
    } else if (u < len2 - w) {
      double y = (u - (len2 - 2.0 * w)) / w;
      Vec2 pa = eval_pos(c2, u), va = eval_vel(c2, u);
      Vec2 pb = eval_pos(c1, u + len1 - len2), vb = eval_vel(c1, u + len1 - len2);
      require_cone(va, vb, cone, "inside the end collar");
      double bmix = smoothstep(y), dbmix = smoothstep_deriv(y) / w;
      p = pa * (1.0 - bmix) + pb * bmix;
      v = va * (1.0 - bmix) + vb * bmix + (pb - pa) * dbmix;
    } else {
      p = eval_pos(c1, u + len1 - len2);
      v = eval_vel(c1, u + len1 - len2);
    }
    out.pos[k] = p;
    out.vel[k] = v;
  }
  out.pos.front() = c1.pos.front();
  out.vel.front() = c1.vel.front();
  out.pos.back() = c1.pos.back();
  out.vel.back() = c1.vel.back();
  return out;
}

}  // namespace

HomotopyFrames synthesize_regular_homotopy(const RegularCurve& from,
                                           const RegularCurve& to,
                                           const SynthesisOptions& opt) {
  require_valid(from, opt.tol);
  require_valid(to, opt.tol);
  if (from.closed != to.closed)
    throw Error(ErrorCode::InvalidInput,
                "cannot deform an open curve into a closed one");

  RegularCurve c1 = resample_valid(from, opt.samples, opt.tol);
  RegularCurve c2 = resample_valid(to, opt.samples, opt.tol);
  std::size_t fps = std::max<std::size_t>(2, opt.frames_per_stage);

  HomotopyFrames H;
  H.spliced = from.closed;

  RegularCurve mid1, mid2, arc1, arc2;
  std::vector<RegularCurve> splice_frames;

  if (from.closed) {
    if (norm(c1.pos.front() - c2.pos.front()) > opt.tol.pos)
      throw Error(ErrorCode::BasePointMismatch,
                  "closed curves must share their base point");
    require_cone(c1.vel.front(), c2.vel.front(), opt.cone_limit,
                 "at the base point");
    double len1 = c1.u.back(), len2 = c2.u.back();
    double w = opt.window_fraction * std::min(len1, len2);
    if (len1 <= 6.0 * w || len2 <= 6.0 * w)
      throw Error(ErrorCode::InvalidInput, "loops too short for end collars");

    RegularCurve grafted = graft_collars(c1, c2, w, opt.cone_limit);
    splice_frames.reserve(fps + 1);
    for (std::size_t k = 0; k <= fps; ++k) {
      double t = static_cast<double>(k) / static_cast<double>(fps);
      RegularCurve f;
      f.closed = true;
      f.u = c2.u;
      f.pos.resize(c2.size());
      f.vel.resize(c2.size());
      for (std::size_t j = 0; j < c2.size(); ++j) {
        f.pos[j] = c2.pos[j] * (1.0 - t) + grafted.pos[j] * t;
        f.vel[j] = c2.vel[j] * (1.0 - t) + grafted.vel[j] * t;
      }
      if (!validate_regular(f, opt.tol).ok)
        throw Error(ErrorCode::InvalidInput,
                    "collar grafting produced an irregular frame; the curves "
                    "differ too much near the base");
      splice_frames.push_back(std::move(f));
    }

    std::size_t n_arc = std::max<std::size_t>(
        32, static_cast<std::size_t>(opt.samples * opt.window_fraction * 4));
    arc1 = slice(c1, 0.0, w, n_arc);
    arc2 = slice(c1, len1 - w, len1, n_arc);
    mid1 = slice(c1, w, len1 - w, opt.samples);
    mid2 = slice(grafted, w, len2 - w, opt.samples);
  } else {
    if (norm(c1.pos.front() - c2.pos.front()) > opt.tol.pos ||
        norm(c1.pos.back() - c2.pos.back()) > opt.tol.pos)
      throw Error(ErrorCode::EndpointMismatch,
                  "open curves must share both endpoints");
    if (std::abs(signed_angle(c1.front_dir(), c2.front_dir())) > 1e-7 ||
        std::abs(signed_angle(c1.back_dir(), c2.back_dir())) > 1e-7)
      throw Error(ErrorCode::InvalidInput,
                  "open curves must share their end directions");
    mid1 = c1;
    mid2 = c2;
  }
  mid2.pos.front() = mid1.pos.front();
  mid2.vel.front() = mid1.vel.front() * (norm(mid2.vel.front()) /
                                         norm(mid1.vel.front()));
  mid2.pos.back() = mid1.pos.back();
  mid2.vel.back() = mid1.vel.back() * (norm(mid2.vel.back()) /
                                       norm(mid1.vel.back()));

  Vec2 p = mid1.pos.front(), q = mid1.pos.back();
  H.separation = norm(q - p);
  if (H.separation < 1e-6)
    throw Error(ErrorCode::DegenerateEnds,
                "trimmed ends coincide; cannot normalize the chord");

  EndNormalizer h = make_normalizer(p, q, mid1.front_dir(), mid1.back_dir());
  auto fwd = [&h](Vec2 z) { return h.map(z); };
  auto dfwd = [&h](Vec2 z) { return h.jacobian(z); };
  // the end twists bend the curve at unit scale in normalized coordinates,
  // so the trimmed pieces need a matching sample density before mapping
  double blow = 10.0 / H.separation;
  auto normalize_in = [&](const RegularCurve& m) {
    auto n = std::max<std::size_t>(
        opt.samples,
        static_cast<std::size_t>(blow * curve_length(m) / 0.02));
    n = std::min<std::size_t>(n, 400001);
    return resample_valid(mapped(resample_arclength(m, n), fwd, dfwd), n,
                          opt.tol);
  };
  RegularCurve eta1 = normalize_in(mid1);
  RegularCurve eta2 = normalize_in(mid2);

  NormPipeline P = run_normalized(eta1, eta2, opt);
  H.length_from = P.l1;
  H.length_to = P.l2;
  H.spike_amplitude = P.spike_amp;
  H.squeeze_scale = P.eps;
  H.squeezed_length = P.leps;

  auto back = [&h](Vec2 z) { return h.unmap(z); };
  auto dback = [&h](Vec2 z) { return h.unjacobian(z); };
  H.frames.reserve(P.frames.size() + splice_frames.size());
  H.stages = std::move(P.stages);
  H.min_speed = std::move(P.min_speed);
  for (RegularCurve& f : P.frames) {
    // the inverse end twists shear directions, so a frame resolved in
    // normalized coordinates can be under-sampled in world coordinates
    RegularCurve world;
    for (int attempt = 0;; ++attempt) {
      world = mapped(f, back, dback);
      if (from.closed)
        // unit pace keeps the trapezoid length exact across the seams; the
        // samples stay put because uniform spacing cannot resolve the
        // squeezed frames
        unit_pace(world);
      if (validate_regular(world, opt.tol).ok) break;
      if (attempt >= 6) {
        require_valid(world, opt.tol);
        break;
      }
      f = resample_arclength(f, 2 * f.size() - 1);
    }
    if (from.closed) {
      world.pos.front() = arc1.pos.back();
      world.pos.back() = arc2.pos.front();
      world = concat(concat(arc1, world, opt.tol), arc2, opt.tol);
      world.closed = true;
    }
    H.frames.push_back(std::move(world));
  }
  if (from.closed) {
    HomotopyStage st{"graft-release", H.frames.size(),
                     H.frames.size() + splice_frames.size() - 1};
    for (std::size_t k = splice_frames.size(); k-- > 0;) {
      H.min_speed.push_back(min_speed_of(splice_frames[k]));
      H.frames.push_back(std::move(splice_frames[k]));
    }
    H.stages.push_back(st);
  }

  Vec2 target_p = from.pos.front(), target_q = from.pos.back();
  H.end_drift.reserve(H.frames.size());
  H.turning_index.reserve(H.frames.size());
  for (const RegularCurve& f : H.frames) {
    H.end_drift.push_back(std::max(norm(f.pos.front() - target_p),
                                   norm(f.pos.back() - target_q)));
    H.turning_index.push_back(i_index(f));
  }
  return H;
}

}  // namespace surfwind

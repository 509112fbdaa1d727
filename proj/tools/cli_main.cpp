#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "surfwind/classify.hpp"
#include "surfwind/homotopy.hpp"
#include "surfwind/scene.hpp"
#include "surfwind/svg.hpp"

namespace sw = surfwind;
using nlohmann::json;

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

const char* kind_name(sw::ValueKind k) {
  switch (k) {
    case sw::ValueKind::Integer: return "integer";
    case sw::ValueKind::Mod2: return "mod2";
    case sw::ValueKind::NonNegInteger: return "nonneg_integer";
  }
  return "?";
}

const char* rule_name(sw::FreeRule r) {
  switch (r) {
    case sw::FreeRule::OrientableInteger: return "orientable_integer";
    case sw::FreeRule::ReversingMod2: return "reversing_mod2";
    case sw::FreeRule::ReversibleAbsolute: return "reversible_absolute";
    case sw::FreeRule::TraceAnchored: return "trace_anchored";
  }
  return "?";
}

const char* surface_name(sw::SurfaceKind k) {
  switch (k) {
    case sw::SurfaceKind::Plane: return "plane";
    case sw::SurfaceKind::Cylinder: return "cylinder";
    case sw::SurfaceKind::Torus: return "torus";
    case sw::SurfaceKind::Moebius: return "moebius";
    case sw::SurfaceKind::Klein: return "klein";
    case sw::SurfaceKind::HyperbolicCustom: return "hyperbolic";
  }
  return "?";
}

json winding_json(const sw::WindingValue& v) {
  json j;
  j["kind"] = kind_name(v.kind);
  j["value"] = v.value;
  j["raw"] = v.raw;
  return j;
}

json free_json(const sw::FreeWinding& w) {
  json j = winding_json(w.value);
  j["rule"] = rule_name(w.rule);
  return j;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sw::Error(sw::ErrorCode::InvalidInput, "cannot write " + path);
  out << content;
}

std::optional<sw::FreeReference> make_reference(const sw::ResolvedScene& scene,
                                                const std::string& ref_name,
                                                const std::string& trace_name) {
  if (ref_name.empty()) return std::nullopt;
  sw::FreeReference ref{sw::find_curve(scene, ref_name), std::nullopt};
  if (!trace_name.empty()) ref.trace = sw::find_curve(scene, trace_name).cover;
  return ref;
}

struct WindingArgs {
  std::string scene_path, curve, reference, trace;
  bool want_free = false;
  bool as_json = false;
  int branch = 0;
};

int run_winding(const WindingArgs& a) {
  sw::ResolvedScene scene = sw::resolve(sw::load_scene(a.scene_path));
  const sw::LiftedCurve& c = sw::find_curve(scene, a.curve);
  bool closed = sw::is_regularly_closed(c);
  double i = sw::i_index(c.cover);
  double jv = sw::j_index(c.cover, a.branch);
  std::string word = sw::word_to_string(sw::class_word(c));

  std::optional<sw::WindingValue> based;
  std::optional<sw::FreeWinding> free_w;
  if (closed) based = sw::based_winding_number(c);
  if (a.want_free)
    free_w = sw::free_winding_number(c, make_reference(scene, a.reference, a.trace));

  if (a.as_json) {
    json j;
    j["curve"] = a.curve;
    j["surface"] = surface_name(c.surface.kind);
    j["class_word"] = word;
    j["regularly_closed"] = closed;
    j["i_index"] = i;
    j["j_index"] = jv;
    if (based) j["based"] = winding_json(*based);
    if (free_w) j["free"] = free_json(*free_w);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "curve: " << a.curve << "\n";
  std::cout << "surface: " << surface_name(c.surface.kind) << "\n";
  std::cout << "class: " << (word.empty() ? "1" : word) << "\n";
  std::cout << "regularly_closed: " << (closed ? "yes" : "no") << "\n";
  std::cout << "i_index: " << fmt(i) << "\n";
  std::cout << "j_index: " << fmt(jv) << "\n";
  if (based) std::cout << "based_winding: " << sw::winding_to_string(*based) << "\n";
  if (free_w)
    std::cout << "free_winding: " << sw::winding_to_string(free_w->value) << " ["
              << rule_name(free_w->rule) << "]\n";
  return 0;
}

struct ClassifyArgs {
  std::string scene_path, reference, trace;
  std::vector<std::string> curves;
  bool use_free = false;
  bool use_based = false;
  bool as_json = false;
};

int run_classify(const ClassifyArgs& a) {
  if (a.use_free == a.use_based)
    throw sw::Error(sw::ErrorCode::InvalidInput,
                    "pick exactly one of --based and --free");
  sw::ResolvedScene scene = sw::resolve(sw::load_scene(a.scene_path));
  std::vector<std::string> names = a.curves;
  if (names.empty())
    for (const auto& [n, c] : scene.curves) names.push_back(n);
  std::vector<sw::LiftedCurve> curves;
  for (const std::string& n : names) curves.push_back(sw::find_curve(scene, n));

  std::optional<sw::FreeReference> ref =
      make_reference(scene, a.reference, a.trace);
  std::vector<std::vector<std::size_t>> groups =
      a.use_based ? sw::classify_based(curves) : sw::classify_free(curves, ref);

  json verdict;
  std::string verdict_text;
  if (curves.size() == 2) {
    if (a.use_based) {
      sw::BasedVerdict v = sw::based_equivalent(curves[0], curves[1]);
      verdict["same_class"] = v.same_class;
      verdict["equivalent"] = v.equivalent;
      verdict["winding_first"] = winding_json(v.w_first);
      verdict["winding_second"] = winding_json(v.w_second);
      verdict_text = "same_class: " + std::string(v.same_class ? "yes" : "no") +
                     "\nwinding_first: " + sw::winding_to_string(v.w_first) +
                     "\nwinding_second: " + sw::winding_to_string(v.w_second) +
                     "\nequivalent: " + (v.equivalent ? "yes" : "no") + "\n";
    } else {
      sw::FreeVerdict v = sw::freely_equivalent(curves[0], curves[1], ref);
      verdict["conjugate"] = v.conjugate;
      verdict["equivalent"] = v.equivalent;
      if (v.w_first) verdict["winding_first"] = free_json(*v.w_first);
      if (v.w_second) verdict["winding_second"] = free_json(*v.w_second);
      verdict_text = "conjugate: " + std::string(v.conjugate ? "yes" : "no");
      if (v.w_first)
        verdict_text += "\nwinding_first: " + sw::winding_to_string(v.w_first->value) +
                        " [" + rule_name(v.w_first->rule) + "]";
      if (v.w_second)
        verdict_text += "\nwinding_second: " + sw::winding_to_string(v.w_second->value) +
                        " [" + rule_name(v.w_second->rule) + "]";
      verdict_text += "\nequivalent: " + std::string(v.equivalent ? "yes" : "no") + "\n";
    }
  }

  if (a.as_json) {
    json j;
    json gs = json::array();
    for (const auto& g : groups) {
      json group = json::array();
      for (std::size_t idx : g) group.push_back(names[idx]);
      gs.push_back(group);
    }
    j["groups"] = gs;
    if (!verdict.empty()) j["verdict"] = verdict;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::cout << "group " << (g + 1) << ":";
    for (std::size_t idx : groups[g]) std::cout << " " << names[idx];
    std::cout << "\n";
  }
  std::cout << verdict_text;
  return 0;
}

struct SynthesizeArgs {
  std::string scene_path, from, to, svg_path;
  std::size_t frames = 12;
  std::size_t samples = 1536;
  std::size_t every = 0;
  bool as_json = false;
};

int run_synthesize(const SynthesizeArgs& a) {
  sw::ResolvedScene scene = sw::resolve(sw::load_scene(a.scene_path));
  const sw::LiftedCurve& from = sw::find_curve(scene, a.from);
  const sw::LiftedCurve& to = sw::find_curve(scene, a.to);

  sw::SynthesisOptions opt;
  opt.frames_per_stage = a.frames;
  opt.samples = a.samples;
  sw::HomotopyFrames H = sw::synthesize_regular_homotopy(from.cover, to.cover, opt);

  double min_speed = 1e300, max_drift = 0.0, spread = 0.0;
  for (double v : H.min_speed) min_speed = std::min(min_speed, v);
  for (double v : H.end_drift) max_drift = std::max(max_drift, v);
  for (double v : H.turning_index)
    spread = std::max(spread, std::abs(v - H.turning_index.front()));

  if (!a.svg_path.empty()) {
    std::size_t stride = a.every ? a.every : std::max<std::size_t>(1, H.frames.size() / 12);
    std::vector<sw::SvgPath> paths;
    for (std::size_t k = 0; k < H.frames.size(); k += stride) {
      double t = static_cast<double>(k) / static_cast<double>(H.frames.size() - 1);
      paths.push_back(sw::path_of(H.frames[k], 0, 0.15 + 0.5 * t, 0.6));
    }
    paths.push_back(sw::path_of(H.frames.front(), 1, 1.0, 1.0));
    paths.push_back(sw::path_of(H.frames.back(), 2, 1.0, 1.0));
    write_file(a.svg_path, sw::render_svg(paths, from.surface.geom));
  }

  if (a.as_json) {
    json j;
    j["frames"] = H.frames.size();
    json stages = json::array();
    for (const sw::HomotopyStage& st : H.stages) {
      json sj;
      sj["name"] = st.name;
      sj["first"] = st.first;
      sj["last"] = st.last;
      stages.push_back(sj);
    }
    j["stages"] = stages;
    j["spliced"] = H.spliced;
    j["min_speed"] = min_speed;
    j["max_end_drift"] = max_drift;
    j["turning_index_spread"] = spread;
    j["turning_index"] = H.turning_index.front();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "frames: " << H.frames.size() << "\n";
  for (const sw::HomotopyStage& st : H.stages)
    std::cout << "stage " << st.name << ": [" << st.first << ", " << st.last
              << "]\n";
  std::cout << "spliced: " << (H.spliced ? "yes" : "no") << "\n";
  std::cout << "turning_index: " << fmt(H.turning_index.front()) << "\n";
  std::cout << "min_speed: " << fmt(min_speed) << "\n";
  std::cout << "max_end_drift: " << fmt(max_drift) << "\n";
  std::cout << "turning_index_spread: " << fmt(spread) << "\n";
  return 0;
}

struct RenderArgs {
  std::string scene_path, out_path;
  std::vector<std::string> curves;
};

int run_render(const RenderArgs& a) {
  sw::ResolvedScene scene = sw::resolve(sw::load_scene(a.scene_path));
  std::vector<std::string> names = a.curves;
  if (names.empty())
    for (const auto& [n, c] : scene.curves) names.push_back(n);
  std::vector<sw::SvgPath> paths;
  for (std::size_t k = 0; k < names.size(); ++k)
    paths.push_back(
        sw::path_of(sw::find_curve(scene, names[k]).cover, static_cast<int>(k)));
  write_file(a.out_path, sw::render_svg(paths, scene.surface.geom));
  std::cout << "wrote " << a.out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"winding numbers, regular homotopy classes and deformations "
               "for curves on flat and hyperbolic surfaces"};
  app.require_subcommand(1);

  WindingArgs wa;
  CLI::App* winding = app.add_subcommand(
      "winding", "indices and winding numbers of a scene curve");
  winding->add_option("--scene", wa.scene_path, "scene JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  winding->add_option("--curve", wa.curve, "curve name")->required();
  winding->add_flag("--free", wa.want_free, "also compute the free winding");
  winding->add_option("--reference", wa.reference,
                      "anchored reference curve for non-reversible classes");
  winding->add_option("--trace", wa.trace, "cover path from the reference base");
  winding->add_option("--branch", wa.branch, "branch offset for the j index");
  winding->add_flag("--json", wa.as_json, "JSON output");

  ClassifyArgs ca;
  CLI::App* classify = app.add_subcommand(
      "classify", "partition scene curves into regular homotopy classes");
  classify->add_option("--scene", ca.scene_path, "scene JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  classify->add_option("--curves", ca.curves, "curve names (default: all)")
      ->delimiter(',');
  classify->add_flag("--based", ca.use_based, "base point fixed");
  classify->add_flag("--free", ca.use_free, "free homotopy");
  classify->add_option("--reference", ca.reference,
                       "anchored reference curve for non-reversible classes");
  classify->add_option("--trace", ca.trace, "cover path from the reference base");
  classify->add_flag("--json", ca.as_json, "JSON output");

  SynthesizeArgs sa;
  CLI::App* synthesize = app.add_subcommand(
      "synthesize", "build an explicit regular homotopy between two curves");
  synthesize->add_option("--scene", sa.scene_path, "scene JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  synthesize->add_option("--from", sa.from, "starting curve")->required();
  synthesize->add_option("--to", sa.to, "target curve")->required();
  synthesize->add_option("--frames", sa.frames, "frames per stage");
  synthesize->add_option("--samples", sa.samples, "samples per frame");
  synthesize->add_option("--svg", sa.svg_path, "write an overlay SVG");
  synthesize->add_option("--every", sa.every, "SVG frame stride");
  synthesize->add_flag("--json", sa.as_json, "JSON output");

  RenderArgs ra;
  CLI::App* render = app.add_subcommand("render", "draw scene curves as SVG");
  render->add_option("--scene", ra.scene_path, "scene JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  render->add_option("--curves", ra.curves, "curve names (default: all)")
      ->delimiter(',');
  render->add_option("--out", ra.out_path, "output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (winding->parsed()) return run_winding(wa);
    if (classify->parsed()) return run_classify(ca);
    if (synthesize->parsed()) return run_synthesize(sa);
    if (render->parsed()) return run_render(ra);
  } catch (const sw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

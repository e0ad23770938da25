// syzkit command line: loads built-in examples or JSON documents, runs one
// operation family per subcommand, and emits canonical JSON reports or SVG
// figures. Exit codes: 0 success, 1 a verification the command ran failed,
// 2 bad input. Errors go to stderr as JSON.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "syzkit/catalog.hpp"
#include "syzkit/io_json.hpp"
#include "syzkit/svg_render.hpp"

namespace fs = std::filesystem;
using namespace syz;
using nlohmann::json;

namespace {

struct Options {
  std::string source;
  std::string out;
  std::string format;  // empty: json everywhere except render (svg)
  double tolerance = -1.0;
  std::string truncation;
  unsigned long long seed = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Input, "cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Peek at the "kind" discriminator of a JSON document on disk.
std::string file_kind(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("kind") ||
      !j["kind"].is_string())
    fail(ErrorKind::Input, "input file is not a syzkit JSON document");
  return j["kind"].get<std::string>();
}

AffineBase load_base(const std::string& src) {
  try {
    return catalog_base(src);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotFound && fs::exists(src))
      return base_from_json(read_file(src));
    throw;
  }
}

// `double res-e1` means: glue two copies of the res-e1 chart.
DoubledBase load_double(const std::string& src) {
  const std::string name = src == "res-e1" ? "k3-double" : src;
  try {
    return catalog_double(name);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotFound && fs::exists(src))
      return double_from_json(read_file(src));
    throw;
  }
}

MomentPolytope load_polytope(const std::string& src) {
  try {
    return catalog_polytope(src);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotFound && fs::exists(src))
      return polytope_from_json(read_file(src));
    throw;
  }
}

WallScenario load_wall_scenario(const std::string& src) {
  try {
    return catalog_wall_scenario(src);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotFound && fs::exists(src))
      return wall_scenario_from_json(read_file(src));
    throw;
  }
}

LeafScenario load_leaf_scenario(const std::string& src) {
  try {
    return catalog_leaf_scenario(src);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotFound && fs::exists(src))
      return leaf_scenario_from_json(read_file(src));
    throw;
  }
}

std::string effective_format(const Options& o, const std::string& sub) {
  if (!o.format.empty()) return o.format;
  return sub == "render" ? "svg" : "json";
}

void require_json(const Options& o, const std::string& sub) {
  if (effective_format(o, sub) != "json")
    fail(ErrorKind::Input, "'" + sub + "' emits JSON only");
}

double tolerance_or(const Options& o, double fallback) {
  return o.tolerance > 0 ? o.tolerance : fallback;
}

std::optional<Rat> truncation_of(const Options& o) {
  if (o.truncation.empty()) return std::nullopt;
  return rat_parse(o.truncation);
}

int emit(const Options& o, const std::string& stem, const std::string& doc,
         const std::string& ext) {
  if (o.out.empty()) {
    std::cout << doc;
    return 0;
  }
  fs::create_directories(o.out);
  const fs::path path = fs::path(o.out) / (stem + "." + ext);
  std::ofstream f(path, std::ios::binary);
  f << doc;
  f.close();
  if (!f) fail(ErrorKind::Input, "cannot write '" + path.string() + "'");
  std::cout << path.string() << "\n";
  return 0;
}

int emit_figure(const Options& o, const std::string& stem, const SvgScene& scene) {
  const RenderResult r = render_svg(scene);
  if (!r.warning.empty()) std::cerr << "warning: " << r.warning << "\n";
  return emit(o, stem, r.svg, "svg");
}

std::vector<Ray> chart_rays(const AffineBase& b) {
  return b.dimension == 2 ? trace_all_rays(b) : std::vector<Ray>{};
}

int run_build(const Options& o) {
  AffineBase b = load_base(o.source);
  validate_base(b);
  if (effective_format(o, "build") == "svg") {
    SvgScene scene;
    scene.base = b;
    scene.rays = chart_rays(b);
    scene.title = b.name;
    return emit_figure(o, "build-" + b.name, scene);
  }
  BasePair p = pair_over(b, b.name);
  validate_pair(p);
  return emit(o, "build-" + b.name, pair_to_json(p), "json");
}

int run_monodromy(const Options& o) {
  require_json(o, "monodromy");
  ConsistencyReport rep;
  std::string name;
  if (fs::exists(o.source)) {
    const std::string text = read_file(o.source);
    const std::string kind = file_kind(text);
    if (kind == "affine-base") {
      AffineBase b = base_from_json(text);
      validate_base(b);
      rep = check_total_monodromy(b);
      name = b.name;
    } else if (kind == "base-pair") {
      BasePair p = pair_from_json(text);
      validate_pair(p);
      rep = check_total_monodromy(p.symplectic_base);
      name = p.name;
    } else if (kind == "doubled-base") {
      DoubledBase d = double_from_json(text);
      validate_double(d);
      rep = check_total_monodromy(d);
      name = d.name;
    } else {
      fail(ErrorKind::Input, "monodromy needs a base, pair, or double document, got '" +
                                 kind + "'");
    }
  } else {
    try {
      AffineBase b = catalog_base(o.source);
      validate_base(b);
      rep = check_total_monodromy(b);
      name = b.name;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotFound) throw;
      DoubledBase d = load_double(o.source);
      validate_double(d);
      rep = check_total_monodromy(d);
      name = d.name;
    }
  }
  emit(o, "monodromy-" + name, consistency_to_json(rep), "json");
  return rep.consistent ? 0 : 1;
}

int run_exchange(const Options& o) {
  require_json(o, "exchange");
  BasePair p;
  if (fs::exists(o.source) && file_kind(read_file(o.source)) == "base-pair")
    p = pair_from_json(read_file(o.source));
  else
    p = pair_over(load_base(o.source), o.source);
  validate_pair(p);
  BasePair swapped = exchange_structures(p);
  validate_pair(swapped);
  return emit(o, "exchange-" + p.name, pair_to_json(swapped), "json");
}

int run_double(const Options& o) {
  DoubledBase d = load_double(o.source);
  validate_double(d);
  if (effective_format(o, "double") == "svg") {
    SvgScene scene;
    scene.doubled = d;
    if (d.half.dimension == 2) scene.rays = trace_all_rays(d);
    scene.title = d.name;
    return emit_figure(o, "double-" + d.name, scene);
  }
  return emit(o, "double-" + d.name, double_to_json(d), "json");
}

int run_census(const Options& o) {
  DoubledBase d = load_double(o.source);
  validate_double(d);
  SeamCensus c = seam_census(d);
  if (effective_format(o, "census") == "svg") {
    SvgScene scene;
    scene.doubled = d;
    scene.rays = c.rays;
    scene.title = d.name;
    return emit_figure(o, "census-" + d.name, scene);
  }
  return emit(o, "census-" + d.name, census_to_json(c), "json");
}

int run_superpotential(const Options& o) {
  require_json(o, "superpotential");
  MomentPolytope p = load_polytope(o.source);
  LaurentElement w = toric_superpotential(p);
  const std::vector<std::string> names =
      w.nvars() == 1 ? std::vector<std::string>{"z"}
                     : std::vector<std::string>{"x", "y"};
  return emit(o, "superpotential-" + o.source, laurent_to_json(w, names), "json");
}

int run_critical(const Options& o) {
  require_json(o, "critical");
  MomentPolytope p = load_polytope(o.source);
  LaurentElement w = toric_superpotential(p);
  CriticalSearchResult r = critical_points(w, std::exp(-1.0));
  emit(o, "critical-" + o.source, critical_to_json(r), "json");
  const double tol = tolerance_or(o, 1e-8);
  if (r.warning) return 1;
  for (const auto& cp : r.points)
    if (!(cp.residual <= tol)) return 1;
  return 0;
}

int run_walls(const Options& o) {
  WallScenario s = load_wall_scenario(o.source);
  for (const auto& w : s.walls) validate_wall(w);
  for (const auto& r : s.relations) validate_gluing(r);
  if (effective_format(o, "walls") == "svg") {
    SvgScene scene;
    scene.walls = s;
    scene.title = s.name;
    return emit_figure(o, "walls-" + s.name, scene);
  }
  json doc = json::parse(wall_scenario_to_json(s));
  if (s.chambers.size() >= 2 && !s.walls.empty() && !s.variable_names.empty()) {
    // Transport the first chamber coordinate across to the second chamber.
    std::vector<long long> e(s.variable_names.size(), 0);
    e[0] = 1;
    LaurentElement before = LaurentElement::monomial(e, EnergyScalar::one());
    LaurentElement after =
        continue_superpotential(before, s.walls,
                                {s.chambers[0].point, s.chambers[1].point},
                                truncation_of(o));
    std::vector<std::string> renamed = s.variable_names;
    renamed[0] = s.chambers[1].name;
    json tr;
    tr["from_chamber"] = s.chambers[0].name;
    tr["to_chamber"] = s.chambers[1].name;
    tr["before"] = json::parse(laurent_to_json(before, s.variable_names));
    tr["after"] = json::parse(laurent_to_json(after, renamed));
    doc["transport"] = tr;
  }
  return emit(o, "walls-" + s.name, doc.dump(2) + "\n", "json");
}

int run_verify_gluing(const Options& o) {
  require_json(o, "verify-gluing");
  WallScenario s = load_wall_scenario(o.source);
  struct Check {
    std::string name;
    bool pass;
  };
  std::vector<Check> checks;
  auto guarded = [&](const std::string& name, auto&& fn) {
    bool pass = false;
    try {
      pass = fn();
    } catch (const Error&) {
      pass = false;
    }
    checks.push_back({name, pass});
  };

  guarded("walls validate", [&] {
    for (const auto& w : s.walls) validate_wall(w);
    return true;
  });
  guarded("relations validate", [&] {
    for (const auto& r : s.relations) validate_gluing(r);
    return true;
  });

  // Random energy exponents in (0, 1).
  std::mt19937_64 rng(o.seed);
  std::vector<Rat> draws;
  for (int i = 0; i < 20; ++i) draws.push_back(Rat(1 + (long long)(rng() % 999), 1000));

  guarded("one-sided relation follows from the chamber substitution", [&] {
    for (const auto& eps : draws)
      if (!single_substitution_holds(eps)) return false;
    return true;
  });
  guarded("symmetric relation is involution compatible", [&] {
    for (const auto& eps : draws)
      if (!involution_compatible(corrected_gluing_double(eps))) return false;
    return true;
  });
  guarded("one-sided relation is not involution compatible", [&] {
    for (const auto& eps : draws)
      if (involution_compatible(corrected_gluing_single(eps))) return false;
    return true;
  });
  guarded("symmetric relation specializes to the one-sided one", [&] {
    for (const auto& eps : draws)
      if (!double_specializes_to_single(eps)) return false;
    return true;
  });

  bool all_pass = true;
  json arr = json::array();
  for (const auto& c : checks) {
    arr.push_back(json{{"name", c.name}, {"pass", c.pass}});
    all_pass = all_pass && c.pass;
  }
  json doc{{"kind", "gluing-report"},
           {"name", s.name},
           {"seed", o.seed},
           {"draws", draws.size()},
           {"checks", arr},
           {"all_pass", all_pass}};
  emit(o, "verify-gluing-" + s.name, doc.dump(2) + "\n", "json");
  return all_pass ? 0 : 1;
}

int run_trace(const Options& o) {
  LeafScenario s = load_leaf_scenario(o.source);
  std::vector<Trajectory> traces;
  for (Cx start : s.starts)
    traces.push_back(trace_leaf(s.theta, start, s.step, s.max_steps));
  if (effective_format(o, "trace") == "svg") {
    SvgScene scene;
    for (const auto& t : traces) scene.curves.push_back(t.points);
    scene.title = s.name;
    return emit_figure(o, "trace-" + s.name, scene);
  }
  return emit(o, "trace-" + s.name, trajectories_to_json(s.name, traces), "json");
}

int run_periods(const Options& o) {
  require_json(o, "periods");
  LeafScenario s = load_leaf_scenario(o.source);
  if (s.starts.size() < 2)
    fail(ErrorKind::Input,
         "periods needs a scenario with two start points (outer and inner leaf)");
  Trajectory a = trace_leaf(s.theta, s.starts[0], s.step, s.max_steps);
  Trajectory b = trace_leaf(s.theta, s.starts[1], s.step, s.max_steps);
  PeriodPair pair;
  try {
    pair = period_pair(s.theta, AreaDensity{}, a, b);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Geometry) throw;
    pair = period_pair(s.theta, AreaDensity{}, b, a);
  }
  return emit(o, "periods-" + s.name, periods_to_json(pair), "json");
}

int run_localmodel(const Options& o) {
  require_json(o, "localmodel");
  Polynomial q = Polynomial::from_real({1.0});
  LocalModelOptions opts;
  opts.samples = 100;
  opts.seed = o.seed;
  LocalModelReport r = local_model_check(0.1, q, 0.0, 0.3, opts);
  emit(o, "localmodel", local_model_to_json(r), "json");
  const double tol = tolerance_or(o, 1e-8);
  const double worst =
      std::max({r.max_constraint_residual, r.max_omega_residual,
                r.max_im_omega_residual, r.max_xi_tangency_residual,
                r.max_xi_omega_residual, r.max_xi_im_omega_identity});
  return worst <= tol ? 0 : 1;
}

int run_render(const Options& o) {
  if (effective_format(o, "render") != "svg")
    fail(ErrorKind::Input, "'render' emits SVG only");
  SvgScene scene;
  std::string stem;
  try {
    AffineBase b = catalog_base(o.source);
    scene.base = b;
    scene.rays = chart_rays(b);
    scene.title = b.name;
    stem = b.name;
  } catch (const Error& eb) {
    if (eb.kind() != ErrorKind::NotFound) throw;
    try {
      DoubledBase d = catalog_double(o.source);
      if (d.half.dimension == 2) scene.rays = trace_all_rays(d);
      scene.doubled = std::move(d);
      scene.title = scene.doubled->name;
      stem = scene.doubled->name;
    } catch (const Error& ed) {
      if (ed.kind() != ErrorKind::NotFound) throw;
      try {
        scene.walls = catalog_wall_scenario(o.source);
        scene.title = scene.walls->name;
        stem = scene.walls->name;
      } catch (const Error& ew) {
        if (ew.kind() != ErrorKind::NotFound || !fs::exists(o.source)) throw;
        const std::string text = read_file(o.source);
        const std::string kind = file_kind(text);
        if (kind == "affine-base") {
          AffineBase b = base_from_json(text);
          scene.rays = chart_rays(b);
          scene.title = b.name;
          stem = b.name;
          scene.base = std::move(b);
        } else if (kind == "doubled-base") {
          DoubledBase d = double_from_json(text);
          if (d.half.dimension == 2) scene.rays = trace_all_rays(d);
          scene.title = d.name;
          stem = d.name;
          scene.doubled = std::move(d);
        } else if (kind == "wall-scenario") {
          scene.walls = wall_scenario_from_json(text);
          scene.title = scene.walls->name;
          stem = scene.walls->name;
        } else {
          fail(ErrorKind::Input, "nothing to render for a '" + kind + "' document");
        }
      }
    }
  }
  return emit_figure(o, "render-" + stem, scene);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computable skeleton of SYZ mirror symmetry: affine bases, "
               "monodromy, doubling, seam census, superpotentials, wall "
               "crossing, leaf tracing, periods, and figures"};
  app.require_subcommand(1);

  Options o;
  std::string run_name;

  auto common = [&](CLI::App* sub, bool with_source, const char* source_help) {
    if (with_source)
      sub->add_option("source", o.source, source_help)->required();
    sub->add_option("--out", o.out, "write the artifact into this directory");
    sub->add_option("--format", o.format, "json or svg")
        ->check(CLI::IsMember({"json", "svg"}));
    sub->add_option("--tolerance", o.tolerance,
                    "verification threshold for numeric reports");
    sub->add_option("--truncation", o.truncation,
                    "energy truncation order for series inverses, as p/q");
    sub->add_option("--seed", o.seed, "seed for randomized checks");
    sub->callback([&, sub] { run_name = sub->get_name(); });
    return sub;
  };

  common(app.add_subcommand("build", "load and validate a base, emit its structure pair"),
         true, "built-in base name or JSON file");
  common(app.add_subcommand("monodromy", "total monodromy consistency check"), true,
         "base or double: built-in name or JSON file");
  common(app.add_subcommand("exchange", "swap the symplectic and complex structures"),
         true, "built-in base name or base-pair JSON file");
  common(app.add_subcommand("double", "glue two copies of a chart along its boundary"),
         true, "built-in name (res-e1, k3-double, sextic-double, odp-k3, cp1) or JSON file");
  common(app.add_subcommand("census", "count seam singularities and ray alignments"),
         true, "built-in double name or JSON file");
  common(app.add_subcommand("superpotential",
                            "toric superpotential of a moment polytope"),
         true, "built-in polytope name (cp1, toric-cp2) or JSON file");
  common(app.add_subcommand("critical", "critical points of a toric superpotential"),
         true, "built-in polytope name or JSON file");
  common(app.add_subcommand("walls", "wall scenario report with chamber transport"),
         true, "built-in scenario name (blowup-wall) or JSON file");
  common(app.add_subcommand("verify-gluing",
                            "check the corrected gluing relations and their involution"),
         true, "built-in scenario name or JSON file");
  common(app.add_subcommand("trace", "integrate constant-phase leaves"), true,
         "built-in leaf scenario name (cp1) or JSON file");
  common(app.add_subcommand("periods", "symplectic and complex lengths of a leaf pair"),
         true, "built-in leaf scenario name or JSON file");
  common(app.add_subcommand("localmodel",
                            "residual check of the blowup local model at fixed parameters"),
         false, nullptr);
  common(app.add_subcommand("render", "SVG figure of a base, double, or wall scenario"),
         true, "built-in name or JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_to_json(Error(ErrorKind::Input, e.what()));
    return 2;
  }

  try {
    if (run_name == "build") return run_build(o);
    if (run_name == "monodromy") return run_monodromy(o);
    if (run_name == "exchange") return run_exchange(o);
    if (run_name == "double") return run_double(o);
    if (run_name == "census") return run_census(o);
    if (run_name == "superpotential") return run_superpotential(o);
    if (run_name == "critical") return run_critical(o);
    if (run_name == "walls") return run_walls(o);
    if (run_name == "verify-gluing") return run_verify_gluing(o);
    if (run_name == "trace") return run_trace(o);
    if (run_name == "periods") return run_periods(o);
    if (run_name == "localmodel") return run_localmodel(o);
    if (run_name == "render") return run_render(o);
  } catch (const Error& e) {
    std::cerr << error_to_json(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << error_to_json(Error(ErrorKind::Invariant, e.what()));
    return 2;
  }
  return 0;
}

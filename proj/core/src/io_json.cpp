#include "syzkit/io_json.hpp"

#include <nlohmann/json.hpp>

namespace syz {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::Input, what); }

// ---- encoders ----

json qvec_j(const QVec2& v) { return json::array({rat_str(v.x), rat_str(v.y)}); }
json ivec_j(const IVec2& v) { return json::array({v.x, v.y}); }
json cx_j(Cx z) { return json::array({z.real(), z.imag()}); }

json umap_j(const UnimodularMap& m) {
  return json{{"matrix", json::array({json::array({m.a, m.b}), json::array({m.c, m.d})})},
              {"translation", json::array({rat_str(m.tx), rat_str(m.ty)})}};
}

json energy_j(const EnergyScalar& c) {
  json arr = json::array();
  for (const auto& [a, coef] : c.terms())
    arr.push_back(json{{"a", rat_str(a)}, {"c", rat_str(coef)}});
  return arr;
}

std::vector<std::string> default_names(std::size_t n) {
  if (n == 1) return {"z"};
  if (n == 2) return {"x", "y"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("z" + std::to_string(i + 1));
  return names;
}

json laurent_j(const LaurentElement& x, std::vector<std::string> names) {
  if (names.size() != x.nvars()) names = default_names(x.nvars());
  json terms = json::array();
  for (const auto& [e, c] : x.terms())
    terms.push_back(json{{"exponents", e}, {"coefficient", energy_j(c)}});
  return json{{"nvars", x.nvars()},
              {"variables", names},
              {"terms", terms},
              {"display", x.str(names)}};
}

json point_j(const SingularPoint& p) {
  return json{{"id", p.id},
              {"position", qvec_j(p.position)},
              {"vanishing_cycle", ivec_j(p.vanishing_cycle)},
              {"multiplicity", p.multiplicity},
              {"cut_to", qvec_j(p.cut_to)}};
}

json base_j(const AffineBase& b) {
  json j{{"kind", "affine-base"},
         {"name", b.name},
         {"dimension", b.dimension},
         {"topology", topology_name(b.topology)},
         {"structure", structure_tag_name(b.tag)}};
  if (b.dimension == 2) {
    json poly = json::array();
    for (const auto& v : b.boundary.vertices) poly.push_back(qvec_j(v));
    j["polygon"] = poly;
    json pts = json::array();
    for (const auto& p : b.points) pts.push_back(point_j(p));
    j["singularities"] = pts;
    j["boundary_normal_degree"] = b.normal_degree;
  } else {
    j["symplectic_length"] = rat_str(b.symplectic_length);
    j["complex_length"] = rat_str(b.complex_length);
  }
  return j;
}

json poly_coeffs_j(const Polynomial& p) {
  json arr = json::array();
  for (Cx c : p.coeffs) {
    if (c.imag() == 0.0)
      arr.push_back(c.real());
    else
      arr.push_back(json::array({c.real(), c.imag()}));
  }
  return arr;
}

json ray_j(const Ray& r) {
  json trace = json::array();
  for (const auto& p : r.trace) trace.push_back(qvec_j(p));
  json dirs = json::array();
  for (const auto& d : r.directions) dirs.push_back(ivec_j(d));
  return json{{"origin", r.origin},
              {"origin_sheet", r.origin_sheet},
              {"structure", structure_tag_name(r.tag)},
              {"sign", r.sign},
              {"seam_ray", r.seam_ray},
              {"end", ray_end_name(r.end)},
              {"end_detail", r.end_detail},
              {"length", rat_str(r.length)},
              {"trace", trace},
              {"directions", dirs},
              {"sheets", r.sheets}};
}

json alignment_j(const Alignment& a) {
  return json{{"ray_a", a.ray_a},
              {"ray_b", a.ray_b},
              {"segment", json::array({qvec_j(a.seg_from), qvec_j(a.seg_to)})},
              {"sheet", a.sheet},
              {"structure", structure_tag_name(a.tag)},
              {"kind", alignment_kind_name(a.kind)},
              {"on_seam", a.on_seam},
              {"fiber_translation_caveat", a.fiber_translation_caveat}};
}

// ---- decoders ----

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("malformed JSON document");
  return j;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad("expected an object with field '" + std::string(key) + "'");
  auto it = j.find(key);
  if (it == j.end()) bad("missing field '" + std::string(key) + "'");
  return *it;
}

void require_kind(const json& j, const char* kind) {
  if (field(j, "kind") != json(kind))
    bad("expected a document of kind '" + std::string(kind) + "'");
}

std::string string_f(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) bad("field '" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

long long int_f(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) bad("field '" + std::string(key) + "' must be an integer");
  return v.get<long long>();
}

double double_f(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number()) bad("field '" + std::string(key) + "' must be a number");
  return v.get<double>();
}

Rat rat_f(const json& v, const std::string& what) {
  if (!v.is_string()) bad(what + " must be a rational string");
  try {
    return rat_parse(v.get<std::string>());
  } catch (const Error&) {
    bad("cannot parse rational " + what + ": '" + v.get<std::string>() + "'");
  }
}

QVec2 qvec_f(const json& v, const std::string& what) {
  if (!v.is_array() || v.size() != 2) bad(what + " must be a pair of rational strings");
  return {rat_f(v[0], what + "[0]"), rat_f(v[1], what + "[1]")};
}

IVec2 ivec_f(const json& v, const std::string& what) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
      !v[1].is_number_integer())
    bad(what + " must be a pair of integers");
  return {v[0].get<long long>(), v[1].get<long long>()};
}

SingularPoint point_f(const json& j) {
  SingularPoint p;
  p.id = string_f(j, "id");
  p.position = qvec_f(field(j, "position"), "position");
  p.vanishing_cycle = ivec_f(field(j, "vanishing_cycle"), "vanishing_cycle");
  p.multiplicity = int_f(j, "multiplicity");
  p.cut_to = qvec_f(field(j, "cut_to"), "cut_to");
  return p;
}

AffineBase base_f(const json& j) {
  require_kind(j, "affine-base");
  AffineBase b;
  b.name = string_f(j, "name");
  b.dimension = static_cast<int>(int_f(j, "dimension"));
  const auto topo = topology_from_name(string_f(j, "topology"));
  if (!topo) bad("unknown topology '" + string_f(j, "topology") + "'");
  b.topology = *topo;
  const auto tag = structure_tag_from_name(string_f(j, "structure"));
  if (!tag) bad("unknown structure '" + string_f(j, "structure") + "'");
  b.tag = *tag;
  if (b.dimension == 2) {
    const json& poly = field(j, "polygon");
    if (!poly.is_array()) bad("field 'polygon' must be an array");
    for (const auto& v : poly) b.boundary.vertices.push_back(qvec_f(v, "polygon vertex"));
    const json& pts = field(j, "singularities");
    if (!pts.is_array()) bad("field 'singularities' must be an array");
    for (const auto& p : pts) b.points.push_back(point_f(p));
    b.normal_degree = int_f(j, "boundary_normal_degree");
  } else {
    b.symplectic_length = rat_f(field(j, "symplectic_length"), "symplectic_length");
    b.complex_length = rat_f(field(j, "complex_length"), "complex_length");
  }
  return b;
}

EnergyScalar energy_f(const json& v) {
  if (!v.is_array()) bad("coefficient must be an array of {a, c} terms");
  EnergyScalar c;
  for (const auto& t : v)
    c += EnergyScalar::monomial(rat_f(field(t, "c"), "coefficient c"),
                                rat_f(field(t, "a"), "coefficient a"));
  return c;
}

LaurentElement laurent_f(const json& j) {
  const long long nv = int_f(j, "nvars");
  if (nv < 0) bad("nvars must be non-negative");
  LaurentElement acc(static_cast<std::size_t>(nv));
  const json& terms = field(j, "terms");
  if (!terms.is_array()) bad("field 'terms' must be an array");
  for (const auto& t : terms) {
    const json& ev = field(t, "exponents");
    if (!ev.is_array() || ev.size() != static_cast<std::size_t>(nv))
      bad("term exponents must be an array of length nvars");
    std::vector<long long> e;
    for (const auto& x : ev) {
      if (!x.is_number_integer()) bad("exponents must be integers");
      e.push_back(x.get<long long>());
    }
    acc += LaurentElement::monomial(e, energy_f(field(t, "coefficient")));
  }
  return acc;
}

Polynomial poly_coeffs_f(const json& v, const std::string& what) {
  if (!v.is_array()) bad(what + " must be an array of coefficients");
  Polynomial p;
  for (const auto& c : v) {
    if (c.is_number())
      p.coeffs.emplace_back(c.get<double>(), 0.0);
    else if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number())
      p.coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
    else
      bad(what + " coefficients must be numbers or [re, im] pairs");
  }
  return p;
}

}  // namespace

std::string base_to_json(const AffineBase& b) { return dump(base_j(b)); }

std::string pair_to_json(const BasePair& p) {
  return dump(json{{"kind", "base-pair"},
                   {"name", p.name},
                   {"symplectic", base_j(p.symplectic_base)},
                   {"complex", base_j(p.complex_base)}});
}

std::string double_to_json(const DoubledBase& d) {
  json seams = json::array();
  for (const auto& s : d.seam_points) seams.push_back(point_j(s));
  return dump(json{{"kind", "doubled-base"},
                   {"name", d.name},
                   {"half", base_j(d.half)},
                   {"seam_points", seams}});
}

std::string polytope_to_json(const MomentPolytope& p) {
  json facets = json::array();
  for (const auto& f : p.facets)
    facets.push_back(json{{"normal", f.normal}, {"offset", rat_str(f.offset)}});
  return dump(json{{"kind", "moment-polytope"}, {"facets", facets}});
}

std::string discs_to_json(const std::vector<DiscClass>& classes) {
  json arr = json::array();
  for (const auto& b : classes)
    arr.push_back(json{{"boundary_class", b.boundary_class},
                       {"area", rat_str(b.area)},
                       {"count", b.count},
                       {"divisor_intersection", b.divisor_intersection}});
  return dump(json{{"kind", "disc-classes"}, {"classes", arr}});
}

std::string laurent_to_json(const LaurentElement& x,
                            const std::vector<std::string>& var_names) {
  json j = laurent_j(x, var_names);
  j["kind"] = "laurent";
  return dump(j);
}

std::string wall_scenario_to_json(const WallScenario& s) {
  json walls = json::array();
  for (const auto& w : s.walls) {
    json wj{{"name", w.name},
            {"support", json::array({qvec_j(w.support_a), qvec_j(w.support_b)})},
            {"normal", ivec_j(w.normal)},
            {"function", laurent_j(w.function, s.variable_names)}};
    if (w.renaming) wj["renaming"] = *w.renaming;
    walls.push_back(wj);
  }
  json relations = json::array();
  for (const auto& r : s.relations)
    relations.push_back(json{{"left", r.left}, {"right", laurent_j(r.right, {"z"})}});
  json chambers = json::array();
  for (const auto& c : s.chambers)
    chambers.push_back(json{{"name", c.name}, {"point", qvec_j(c.point)}});
  json j{{"kind", "wall-scenario"},
         {"name", s.name},
         {"variables", s.variable_names},
         {"walls", walls},
         {"relations", relations},
         {"chambers", chambers},
         {"frame", json::array({qvec_j(s.frame_lo), qvec_j(s.frame_hi)})}};
  if (s.singular_position) j["singular_position"] = qvec_j(*s.singular_position);
  if (s.vanishing_cycle) j["vanishing_cycle"] = ivec_j(*s.vanishing_cycle);
  if (s.cut_to) j["cut_to"] = qvec_j(*s.cut_to);
  return dump(j);
}

std::string leaf_scenario_to_json(const LeafScenario& s) {
  json starts = json::array();
  for (Cx z : s.starts) starts.push_back(cx_j(z));
  return dump(json{{"kind", "leaf-scenario"},
                   {"name", s.name},
                   {"p_num", poly_coeffs_j(s.theta.numerator)},
                   {"p_den", poly_coeffs_j(s.theta.denominator)},
                   {"phase", s.theta.phase},
                   {"starts", starts},
                   {"step", s.step},
                   {"max_steps", s.max_steps}});
}

std::string consistency_to_json(const ConsistencyReport& r) {
  json factors = json::array();
  for (const auto& f : r.factors)
    factors.push_back(json{{"point", f.point_id}, {"matrix", umap_j(f.matrix)}});
  return dump(json{{"kind", "monodromy-report"},
                   {"consistent", r.consistent},
                   {"product", umap_j(r.product)},
                   {"boundary", umap_j(r.boundary)},
                   {"factors", factors}});
}

std::string census_to_json(const SeamCensus& c) {
  json rays = json::array();
  for (const auto& r : c.rays) rays.push_back(ray_j(r));
  json als = json::array();
  for (const auto& a : c.alignments) als.push_back(alignment_j(a));
  return dump(json{{"kind", "census-report"},
                   {"seam_singular_count", c.seam_singular_count},
                   {"interior_pair_count", c.interior_pair_count},
                   {"matched_pair_count", c.matched_pair_count},
                   {"seam_sphere_alignments", c.seam_sphere_alignments},
                   {"seam_curve_alignments", c.seam_curve_alignments},
                   {"matched_ids", c.matched_ids},
                   {"notes", c.notes},
                   {"rays", rays},
                   {"alignments", als}});
}

std::string rays_to_json(const std::vector<Ray>& rays) {
  json arr = json::array();
  for (const auto& r : rays) arr.push_back(ray_j(r));
  return dump(json{{"kind", "ray-report"}, {"rays", arr}});
}

std::string alignments_to_json(const std::vector<Alignment>& alignments) {
  json arr = json::array();
  for (const auto& a : alignments) arr.push_back(alignment_j(a));
  return dump(json{{"kind", "alignment-report"}, {"alignments", arr}});
}

std::string critical_to_json(const CriticalSearchResult& r) {
  json pts = json::array();
  for (const auto& p : r.points) {
    json coords = json::array();
    for (Cx z : p.point) coords.push_back(cx_j(z));
    pts.push_back(
        json{{"point", coords}, {"value", cx_j(p.value)}, {"residual", p.residual}});
  }
  return dump(json{{"kind", "critical-report"},
                   {"points", pts},
                   {"warning", r.warning},
                   {"note", r.note}});
}

namespace {

json trajectory_j(const Trajectory& t) {
  json pts = json::array();
  for (Cx z : t.points) pts.push_back(cx_j(z));
  json vel = json::array();
  for (Cx z : t.velocities) vel.push_back(cx_j(z));
  json log = json::array();
  for (const auto& e : t.branch_log)
    log.push_back(json{{"step", e.step}, {"sign", e.sign}});
  return json{{"closed", t.closed},
              {"closure_gap", t.closure_gap},
              {"stopped", t.stopped},
              {"max_phase_deviation", t.max_phase_deviation},
              {"branch_log", log},
              {"points", pts},
              {"velocities", vel},
              {"times", t.times}};
}

}  // namespace

std::string trajectory_to_json(const Trajectory& t) {
  json j = trajectory_j(t);
  j["kind"] = "leaf-trace";
  return dump(j);
}

std::string trajectories_to_json(const std::string& name,
                                 const std::vector<Trajectory>& traces) {
  json arr = json::array();
  for (const auto& t : traces) arr.push_back(trajectory_j(t));
  return dump(json{{"kind", "leaf-trace-report"}, {"name", name}, {"trajectories", arr}});
}

std::string periods_to_json(const PeriodPair& p) {
  const PeriodPair d = double_cover_periods(p);
  return dump(json{{"kind", "period-report"},
                   {"symplectic_length", p.symplectic_length},
                   {"complex_length", p.complex_length},
                   {"double_cover",
                    json{{"symplectic_length", d.symplectic_length},
                         {"complex_length", d.complex_length}}}});
}

std::string local_model_to_json(const LocalModelReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples)
    samples.push_back(json{{"z", cx_j(s.z)},
                           {"u", cx_j(s.u)},
                           {"v", cx_j(s.v)},
                           {"singular", s.singular},
                           {"degenerate", s.degenerate},
                           {"constraint_residual", s.constraint_residual},
                           {"omega_residual", s.omega_residual},
                           {"im_omega_residual", s.im_omega_residual}});
  return dump(json{{"kind", "local-model-report"},
                   {"eps", r.eps},
                   {"a", r.a},
                   {"b", r.b},
                   {"sample_count", r.samples.size()},
                   {"singular_count", r.singular_count},
                   {"degenerate_count", r.degenerate_count},
                   {"max_constraint_residual", r.max_constraint_residual},
                   {"max_omega_residual", r.max_omega_residual},
                   {"max_im_omega_residual", r.max_im_omega_residual},
                   {"max_xi_tangency_residual", r.max_xi_tangency_residual},
                   {"max_xi_omega_residual", r.max_xi_omega_residual},
                   {"max_xi_im_omega_identity", r.max_xi_im_omega_identity},
                   {"max_involution_residual", r.max_involution_residual},
                   {"fd",
                    json{{"step", r.fd_step},
                         {"residual", r.fd_residual},
                         {"residual_half", r.fd_residual_half}}},
                   {"samples", samples}});
}

std::string error_to_json(const Error& e) {
  return dump(
      json{{"error", json{{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}});
}

AffineBase base_from_json(const std::string& text) { return base_f(parse_text(text)); }

BasePair pair_from_json(const std::string& text) {
  const json j = parse_text(text);
  require_kind(j, "base-pair");
  BasePair p;
  p.name = string_f(j, "name");
  p.symplectic_base = base_f(field(j, "symplectic"));
  p.complex_base = base_f(field(j, "complex"));
  return p;
}

DoubledBase double_from_json(const std::string& text) {
  const json j = parse_text(text);
  require_kind(j, "doubled-base");
  DoubledBase d;
  d.name = string_f(j, "name");
  d.half = base_f(field(j, "half"));
  const json& seams = field(j, "seam_points");
  if (!seams.is_array()) bad("field 'seam_points' must be an array");
  for (const auto& s : seams) d.seam_points.push_back(point_f(s));
  return d;
}

MomentPolytope polytope_from_json(const std::string& text) {
  const json j = parse_text(text);
  require_kind(j, "moment-polytope");
  MomentPolytope p;
  const json& facets = field(j, "facets");
  if (!facets.is_array()) bad("field 'facets' must be an array");
  for (const auto& f : facets) {
    Facet facet;
    const json& n = field(f, "normal");
    if (!n.is_array()) bad("facet normal must be an array of integers");
    for (const auto& x : n) {
      if (!x.is_number_integer()) bad("facet normal entries must be integers");
      facet.normal.push_back(x.get<long long>());
    }
    facet.offset = rat_f(field(f, "offset"), "facet offset");
    p.facets.push_back(facet);
  }
  return p;
}

std::vector<DiscClass> discs_from_json(const std::string& text) {
  const json j = parse_text(text);
  require_kind(j, "disc-classes");
  std::vector<DiscClass> out;
  const json& classes = field(j, "classes");
  if (!classes.is_array()) bad("field 'classes' must be an array");
  for (const auto& c : classes) {
    DiscClass d;
    const json& bc = field(c, "boundary_class");
    if (!bc.is_array()) bad("boundary_class must be an array of integers");
    for (const auto& x : bc) {
      if (!x.is_number_integer()) bad("boundary_class entries must be integers");
      d.boundary_class.push_back(x.get<long long>());
    }
    d.area = rat_f(field(c, "area"), "area");
    d.count = int_f(c, "count");
    d.divisor_intersection = int_f(c, "divisor_intersection");
    out.push_back(d);
  }
  return out;
}

WallScenario wall_scenario_from_json(const std::string& text) {
  const json j = parse_text(text);
  require_kind(j, "wall-scenario");
  WallScenario s;
  s.name = string_f(j, "name");
  const json& vars = field(j, "variables");
  if (!vars.is_array()) bad("field 'variables' must be an array of names");
  for (const auto& v : vars) {
    if (!v.is_string()) bad("variable names must be strings");
    s.variable_names.push_back(v.get<std::string>());
  }
  const json& walls = field(j, "walls");
  if (!walls.is_array()) bad("field 'walls' must be an array");
  for (const auto& wj : walls) {
    Wall w;
    w.name = string_f(wj, "name");
    const json& sup = field(wj, "support");
    if (!sup.is_array() || sup.size() != 2) bad("wall support must be a pair of points");
    w.support_a = qvec_f(sup[0], "support[0]");
    w.support_b = qvec_f(sup[1], "support[1]");
    w.normal = ivec_f(field(wj, "normal"), "wall normal");
    w.function = laurent_f(field(wj, "function"));
    if (wj.contains("renaming")) {
      const json& rn = wj["renaming"];
      if (!rn.is_array()) bad("wall renaming must be a matrix");
      std::vector<std::vector<long long>> mat;
      for (const auto& row : rn) {
        if (!row.is_array()) bad("wall renaming must be a matrix");
        std::vector<long long> r;
        for (const auto& x : row) {
          if (!x.is_number_integer()) bad("renaming entries must be integers");
          r.push_back(x.get<long long>());
        }
        mat.push_back(r);
      }
      w.renaming = mat;
    }
    s.walls.push_back(w);
  }
  const json& relations = field(j, "relations");
  if (!relations.is_array()) bad("field 'relations' must be an array");
  for (const auto& r : relations)
    s.relations.push_back({string_f(r, "left"), laurent_f(field(r, "right"))});
  const json& chambers = field(j, "chambers");
  if (!chambers.is_array()) bad("field 'chambers' must be an array");
  for (const auto& c : chambers)
    s.chambers.push_back({string_f(c, "name"), qvec_f(field(c, "point"), "chamber point")});
  const json& frame = field(j, "frame");
  if (!frame.is_array() || frame.size() != 2) bad("field 'frame' must be a pair of points");
  s.frame_lo = qvec_f(frame[0], "frame[0]");
  s.frame_hi = qvec_f(frame[1], "frame[1]");
  if (j.contains("singular_position"))
    s.singular_position = qvec_f(j["singular_position"], "singular_position");
  if (j.contains("vanishing_cycle"))
    s.vanishing_cycle = ivec_f(j["vanishing_cycle"], "vanishing_cycle");
  if (j.contains("cut_to")) s.cut_to = qvec_f(j["cut_to"], "cut_to");
  return s;
}

LeafScenario leaf_scenario_from_json(const std::string& text) {
  const json j = parse_text(text);
  require_kind(j, "leaf-scenario");
  LeafScenario s;
  s.name = string_f(j, "name");
  s.theta.numerator = poly_coeffs_f(field(j, "p_num"), "p_num");
  s.theta.denominator = poly_coeffs_f(field(j, "p_den"), "p_den");
  s.theta.phase = double_f(j, "phase");
  const json& starts = field(j, "starts");
  if (!starts.is_array()) bad("field 'starts' must be an array");
  for (const auto& z : starts) {
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
      bad("starts entries must be [re, im] pairs");
    s.starts.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  s.step = double_f(j, "step");
  s.max_steps = static_cast<int>(int_f(j, "max_steps"));
  return s;
}

}  // namespace syz

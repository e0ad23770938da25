#include "syzkit/catalog.hpp"

#include <numbers>

#include "syzkit/errors.hpp"

namespace syz {

namespace {

QVec2 qv(const Rat& x, const Rat& y) { return {x, y}; }

// Degree-9 disc chart: the staircase carves the boundary into 18 unit steps
// so the doubled sphere can seat one or two seam singularities per step.
AffineBase cp2_cubic() {
  AffineBase b;
  b.name = "cp2-cubic";
  b.dimension = 2;
  b.topology = Topology::Disc;
  b.tag = StructureTag::Symplectic;
  b.boundary.vertices = {qv(0, 0),    qv(2, 0),    qv(2, -1),  qv(4, -1),  qv(4, -2),
                         qv(6, -2),   qv(6, -3),   qv(8, -3),  qv(8, -4),  qv(10, -4),
                         qv(10, -5),  qv(12, -5),  qv(12, -6), qv(14, -6), qv(14, -7),
                         qv(16, -7),  qv(16, -8),  qv(18, -8), qv(18, 6),  qv(0, 6)};
  b.points = {
      {"p", qv(13, 2), {3, -1}, 1, qv(13, 6)},
      {"q", qv(10, 2), {-3, 2}, 1, qv(10, 6)},
      {"r", qv(7, 2), {0, 1}, 1, qv(7, 6)},
  };
  b.normal_degree = 9;
  return b;
}

// Nine extra focus-focus points with horizontal cycles: the boundary class
// becomes trivial, so the chart doubles to a sphere without boundary
// corrections. The exceptional heights (10+k)/10 stagger the points off a
// common line.
AffineBase res_e1() {
  AffineBase b;
  b.name = "res-e1";
  b.dimension = 2;
  b.topology = Topology::Disc;
  b.tag = StructureTag::Symplectic;
  b.boundary.vertices = {qv(0, 0), qv(20, 0), qv(20, 6), qv(0, 6)};
  for (int k = 0; k < 9; ++k) {
    SingularPoint t;
    t.id = "t" + std::to_string(k);
    t.position = qv(6 + k, Rat(10 + k, 10));
    t.vanishing_cycle = {1, 0};
    t.cut_to = qv(Rat(170 + 19 * k, 20), 6);
    b.points.push_back(t);
  }
  b.points.push_back({"p", qv(3, 1), {3, -1}, 1, qv(Rat(11, 2), 6)});
  b.points.push_back({"q", qv(2, 1), {-3, 2}, 1, qv(Rat(9, 2), 6)});
  b.points.push_back({"r", qv(1, 1), {0, 1}, 1, qv(Rat(7, 2), 6)});
  b.normal_degree = 0;
  return b;
}

AffineBase cp1() {
  AffineBase b;
  b.name = "cp1";
  b.dimension = 1;
  b.topology = Topology::Interval;
  b.tag = StructureTag::Symplectic;
  b.symplectic_length = 5;
  b.complex_length = 2;
  return b;
}

AffineBase elliptic() {
  AffineBase b;
  b.name = "elliptic";
  b.dimension = 1;
  b.topology = Topology::Circle;
  b.tag = StructureTag::Symplectic;
  b.symplectic_length = 2;
  b.complex_length = 3;
  return b;
}

// Two simple seam points per staircase step, horizontal cycles along the
// step edges.
std::vector<SingularPoint> sextic_seams() {
  std::vector<SingularPoint> seams;
  for (int k = 1; k <= 9; ++k) {
    for (int half = 0; half < 2; ++half) {
      SingularPoint s;
      s.id = "s" + std::to_string(2 * (k - 1) + half + 1);
      s.position = qv(Rat(4 * k - 3 + 2 * half, 2), Rat(1 - k));
      s.vanishing_cycle = {1, 0};
      s.multiplicity = 1;
      s.cut_to = s.position;
      seams.push_back(s);
    }
  }
  return seams;
}

// One multiplicity-2 seam point per step: the ordinary-double-point
// degeneration of the sextic seam configuration.
std::vector<SingularPoint> odp_seams() {
  std::vector<SingularPoint> seams;
  for (int k = 1; k <= 9; ++k) {
    SingularPoint s;
    s.id = "o" + std::to_string(k);
    s.position = qv(Rat(2 * k - 1), Rat(1 - k));
    s.vanishing_cycle = {1, 0};
    s.multiplicity = 2;
    s.cut_to = s.position;
    seams.push_back(s);
  }
  return seams;
}

[[noreturn]] void unknown(const std::string& name, const std::string& artifact) {
  std::string names;
  for (const auto& n : list_examples()) {
    if (!names.empty()) names += ", ";
    names += n;
  }
  fail(ErrorKind::NotFound,
       "no built-in " + artifact + " named '" + name + "' (examples: " + names + ")");
}

}  // namespace

std::vector<std::string> list_examples() {
  return {"cp1",       "elliptic",      "toric-cp2", "cp2-cubic",  "res-e1",
          "k3-double", "sextic-double", "odp-k3",    "blowup-wall"};
}

AffineBase catalog_base(const std::string& name) {
  if (name == "cp2-cubic") return cp2_cubic();
  if (name == "res-e1") return res_e1();
  if (name == "cp1") return cp1();
  if (name == "elliptic") return elliptic();
  unknown(name, "base");
}

BasePair catalog_pair(const std::string& name) {
  return pair_over(catalog_base(name), name);
}

DoubledBase catalog_double(const std::string& name) {
  if (name == "k3-double") return make_double(res_e1(), {}, "k3-double");
  if (name == "sextic-double") return make_double(cp2_cubic(), sextic_seams(), "sextic-double");
  if (name == "odp-k3") return make_double(cp2_cubic(), odp_seams(), "odp-k3");
  if (name == "cp1") return make_double(cp1(), {}, "cp1-double");
  unknown(name, "double");
}

MomentPolytope catalog_polytope(const std::string& name) {
  if (name == "cp1") return {{{{1}, Rat(0)}, {{-1}, Rat(5)}}};
  if (name == "toric-cp2") return {{{{1, 0}, Rat(0)}, {{0, 1}, Rat(0)}, {{-1, -1}, Rat(5)}}};
  unknown(name, "moment polytope");
}

std::vector<DiscClass> catalog_discs(const std::string& name) {
  if (name == "cp1") return {{{1}, Rat(2), 1, 1}, {{-1}, Rat(3), 1, 1}};
  unknown(name, "disc class list");
}

LeafScenario catalog_leaf_scenario(const std::string& name) {
  if (name == "cp1") {
    LeafScenario s;
    s.name = "cp1";
    s.theta.numerator = Polynomial::from_real({1});
    s.theta.denominator = Polynomial::from_real({-1, 0, 1});
    s.theta.phase = std::numbers::pi / 2;
    s.starts = {Cx(2.0, 0.0), Cx(3.0, 0.0)};
    s.step = 0.01;
    s.max_steps = 200000;
    return s;
  }
  unknown(name, "leaf scenario");
}

WallScenario catalog_wall_scenario(const std::string& name) {
  if (name != "blowup-wall") unknown(name, "wall scenario");

  WallScenario s;
  s.name = "blowup-wall";
  s.variable_names = {"u", "z"};

  Wall w;
  w.name = "exceptional";
  w.support_a = qv(0, 1);
  w.support_b = qv(0, 0);
  w.normal = {1, 0};
  w.function = LaurentElement::monomial({0, 0}, EnergyScalar::one()) +
               LaurentElement::monomial({0, -1}, EnergyScalar::monomial(1, Rat(1, 2)));
  w.renaming = {{{-1, 0}, {0, 1}}};
  s.walls = {w};

  s.relations = {corrected_gluing_single(Rat(1, 2)), corrected_gluing_double(Rat(1, 2))};
  s.chambers = {{"u", qv(-2, Rat(1, 2))}, {"v", qv(2, Rat(1, 2))}};
  s.frame_lo = qv(-4, 0);
  s.frame_hi = qv(4, 4);
  s.singular_position = qv(0, 1);
  s.vanishing_cycle = IVec2{1, 0};
  s.cut_to = qv(0, 4);
  return s;
}

}  // namespace syz

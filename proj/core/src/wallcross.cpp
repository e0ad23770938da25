#include "syzkit/wallcross.hpp"

#include <algorithm>

#include "syzkit/errors.hpp"

namespace syz {

namespace {

long long pair_with_normal(const std::vector<long long>& m, const IVec2& n) {
  return m[0] * n.x + m[1] * n.y;
}

LaurentElement pow_maybe_truncated(const LaurentElement& f, long long k,
                                   const std::optional<Rat>& truncation) {
  LaurentElement acc = LaurentElement::constant(f.nvars(), EnergyScalar::one());
  LaurentElement base = f;
  while (k > 0) {
    if (k & 1ll) {
      acc = acc * base;
      if (truncation) acc = acc.truncated(*truncation);
    }
    k >>= 1;
    if (k == 0) break;
    base = base * base;
    if (truncation) base = base.truncated(*truncation);
  }
  return acc;
}

std::vector<std::vector<long long>> inverted_renaming(
    const std::vector<std::vector<long long>>& r) {
  if (r.size() == 1) return r;  // [[1]] or [[-1]], both self-inverse
  if (r.size() == 2) {
    const long long det = r[0][0] * r[1][1] - r[0][1] * r[1][0];
    if (det != 1 && det != -1)
      fail(ErrorKind::Domain, "renaming must be unimodular");
    return {{det * r[1][1], -det * r[0][1]}, {-det * r[1][0], det * r[0][0]}};
  }
  fail(ErrorKind::Domain, "renaming inverse handles at most two variables");
}

Rat normal_dot(const IVec2& n, const QVec2& v) { return Rat(n.x) * v.x + Rat(n.y) * v.y; }

struct CrossingEvent {
  Rat t;
  std::size_t wall;
  int orientation;
};

}  // namespace

void validate_wall(const Wall& w) {
  if (w.support_a == w.support_b)
    fail(ErrorKind::Invariant, "wall support has zero length");
  if (!is_primitive(w.normal)) fail(ErrorKind::Invariant, "wall normal must be primitive");
  if (normal_dot(w.normal, q_sub(w.support_b, w.support_a)) != 0)
    fail(ErrorKind::Invariant, "wall normal must be perpendicular to the support");
  if (w.function.nvars() != 2)
    fail(ErrorKind::Invariant, "wall function lives in two torus variables");
  if (!w.function.constant_coefficient().is_one())
    fail(ErrorKind::Invariant, "wall function needs unit constant term");
  for (const auto& [m, c] : w.function.terms())
    if (pair_with_normal(m, w.normal) != 0)
      fail(ErrorKind::Invariant, "wall function must be invariant under its own crossing");
  if (w.renaming) {
    const auto& r = *w.renaming;
    if (r.size() != 2 || r[0].size() != 2 || r[1].size() != 2)
      fail(ErrorKind::Invariant, "renaming must be a 2x2 integer matrix");
    const long long det = r[0][0] * r[1][1] - r[0][1] * r[1][0];
    if (det != 1 && det != -1) fail(ErrorKind::Invariant, "renaming must be unimodular");
  }
}

void validate_gluing(const GluingRelation& r) {
  if (r.left.empty()) fail(ErrorKind::Invariant, "gluing relation needs a left-hand label");
  const EnergyScalar c0 = r.right.constant_coefficient();
  auto it = c0.terms().find(Rat(0));
  if (it == c0.terms().end() || it->second != 1)
    fail(ErrorKind::Invariant, "gluing right side needs unit leading coefficient");
}

LaurentElement cross_monomial(const Wall& w, const std::vector<long long>& exponents,
                              const EnergyScalar& c, int orientation,
                              const std::optional<Rat>& truncation) {
  if (orientation != 1 && orientation != -1)
    fail(ErrorKind::Domain, "crossing orientation must be +1 or -1");
  if (exponents.size() != 2 || w.function.nvars() != 2)
    fail(ErrorKind::Invariant, "crossing acts on two-variable monomials");
  const long long k = orientation * pair_with_normal(exponents, w.normal);
  LaurentElement base = LaurentElement::monomial(exponents, c);
  if (k == 0) return truncation ? base.truncated(*truncation) : base;
  LaurentElement factor;
  if (k > 0) {
    factor = pow_maybe_truncated(w.function, k, truncation);
  } else {
    if (!truncation)
      fail(ErrorKind::Truncation,
           "crossing needs the series inverse of the wall function; supply a truncation order");
    const LaurentElement inv = w.function.inverse_truncated(*truncation);
    factor = pow_maybe_truncated(inv, -k, truncation);
  }
  LaurentElement out = base * factor;
  return truncation ? out.truncated(*truncation) : out;
}

LaurentElement cross_element(const Wall& w, const LaurentElement& x, int orientation,
                             const std::optional<Rat>& truncation) {
  LaurentElement out(x.nvars());
  for (const auto& [m, c] : x.terms())
    out += cross_monomial(w, m, c, orientation, truncation);
  return out;
}

GluingRelation corrected_gluing_single(const Rat& eps) {
  if (eps <= 0) fail(ErrorKind::Domain, "gluing parameter must be positive");
  GluingRelation r;
  r.left = "u*v";
  r.right = LaurentElement::constant(1, EnergyScalar::one()) +
            LaurentElement::monomial({-1}, EnergyScalar::monomial(Rat(1), eps));
  return r;
}

GluingRelation corrected_gluing_double(const Rat& eps) {
  if (eps <= 0) fail(ErrorKind::Domain, "gluing parameter must be positive");
  const LaurentElement one = LaurentElement::constant(1, EnergyScalar::one());
  const LaurentElement down =
      one + LaurentElement::monomial({-1}, EnergyScalar::monomial(Rat(1), eps));
  const LaurentElement up =
      one + LaurentElement::monomial({1}, EnergyScalar::monomial(Rat(1), eps));
  GluingRelation r;
  r.left = "u*v";
  r.right = down * up;
  return r;
}

bool involution_compatible(const GluingRelation& r) {
  if (r.right.nvars() == 0) return true;
  return r.right.substitute_inverse(0) == r.right;
}

bool single_substitution_holds(const Rat& eps) {
  // Variables (v, z). The chamber expression for u times v should equal the
  // right side of the single-wall gluing with the v-exponent at zero.
  const LaurentElement u_expr =
      LaurentElement::monomial({-1, 0}, EnergyScalar::one()) +
      LaurentElement::monomial({-1, -1}, EnergyScalar::monomial(Rat(1), eps));
  const LaurentElement v = LaurentElement::monomial({1, 0}, EnergyScalar::one());
  const LaurentElement expected =
      LaurentElement::monomial({0, 0}, EnergyScalar::one()) +
      LaurentElement::monomial({0, -1}, EnergyScalar::monomial(Rat(1), eps));
  return u_expr * v == expected;
}

bool double_specializes_to_single(const Rat& eps) {
  const LaurentElement diff =
      corrected_gluing_double(eps).right - corrected_gluing_single(eps).right;
  return diff.try_divide_monomial({1}, eps).has_value();
}

Rat default_truncation_order(const std::vector<Wall>& walls) {
  bool found = false;
  Rat best;
  for (const auto& w : walls) {
    LaurentElement g = w.function;
    g -= LaurentElement::constant(g.nvars(), EnergyScalar::one());
    for (const auto& [m, c] : g.terms()) {
      const Rat e = c.min_exponent();
      if (e <= 0) continue;
      if (!found || e < best) best = e;
      found = true;
    }
  }
  if (!found)
    fail(ErrorKind::Domain, "no wall carries a positive energy exponent to truncate by");
  return Rat(10) * best;
}

LaurentElement continue_superpotential(const LaurentElement& w, const std::vector<Wall>& walls,
                                       const std::vector<QVec2>& path,
                                       std::optional<Rat> truncation) {
  for (const auto& wall : walls) validate_wall(wall);
  LaurentElement x = w;
  std::optional<Rat> active = truncation;
  if (path.size() < 2 || walls.empty()) return x;

  for (std::size_t seg = 0; seg + 1 < path.size(); ++seg) {
    const QVec2& p = path[seg];
    const QVec2& q = path[seg + 1];
    if (p == q) continue;
    const QVec2 dir = q_sub(q, p);

    std::vector<CrossingEvent> events;
    for (std::size_t wi = 0; wi < walls.size(); ++wi) {
      const Wall& wall = walls[wi];
      if (segments_overlap(p, q, wall.support_a, wall.support_b))
        fail(ErrorKind::Path, "path runs along a wall support");
      const auto hit = segment_intersection(p, q, wall.support_a, wall.support_b);
      if (!hit) continue;
      const QVec2& pt = *hit;
      if (pt == p || pt == q) fail(ErrorKind::Path, "path waypoint lies on a wall");
      if (pt == wall.support_a || pt == wall.support_b)
        fail(ErrorKind::Path, "path crosses a wall at a support endpoint");
      const Rat along = normal_dot(wall.normal, dir);
      if (along == 0) fail(ErrorKind::Path, "path touches a wall tangentially");
      const Rat t = dir.x != 0 ? (pt.x - p.x) / dir.x : (pt.y - p.y) / dir.y;
      events.push_back({t, wi, along > 0 ? 1 : -1});
    }
    std::sort(events.begin(), events.end(),
              [](const CrossingEvent& a, const CrossingEvent& b) { return a.t < b.t; });
    for (std::size_t i = 0; i + 1 < events.size(); ++i)
      if (events[i].t == events[i + 1].t)
        fail(ErrorKind::Path, "two wall crossings coincide on the path");

    for (const auto& ev : events) {
      const Wall& wall = walls[ev.wall];
      if (ev.orientation < 0 && wall.renaming)
        x = x.apply_exponent_map(inverted_renaming(*wall.renaming));
      bool needs_inverse = false;
      for (const auto& [m, c] : x.terms())
        if (ev.orientation * pair_with_normal(m, wall.normal) < 0) {
          needs_inverse = true;
          break;
        }
      if (needs_inverse && !active) active = default_truncation_order(walls);
      x = cross_element(wall, x, ev.orientation, active);
      if (ev.orientation > 0 && wall.renaming) x = x.apply_exponent_map(*wall.renaming);
    }
  }
  return x;
}

}  // namespace syz

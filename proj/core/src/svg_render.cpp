#include "syzkit/svg_render.hpp"

#include <algorithm>
#include <cstdio>

#include "syzkit/rational.hpp"

namespace syz {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&')
      out += "&amp;";
    else if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else
      out += c;
  }
  return out;
}

// Chart-to-pixel frame. SVG y grows downward, chart y grows upward, so the
// vertical axis flips here and nowhere else.
struct Frame {
  double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
  double scale = 40.0;
  double pad = 24.0;

  void grow(double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  double px(double x) const { return (x - x0) * scale + pad; }
  double py(double y) const { return (y1 - y) * scale + pad; }
  double width() const { return (x1 - x0) * scale + 2 * pad; }
  double height() const { return (y1 - y0) * scale + 2 * pad; }
};

double qx(const QVec2& p) { return rat_double(p.x); }
double qy(const QVec2& p) { return rat_double(p.y); }

void add_line(std::string& out, const Frame& f, double ax, double ay, double bx,
              double by, const char* cls) {
  out += "    <line class=\"" + std::string(cls) + "\" x1=\"" + fmt(f.px(ax)) +
         "\" y1=\"" + fmt(f.py(ay)) + "\" x2=\"" + fmt(f.px(bx)) + "\" y2=\"" +
         fmt(f.py(by)) + "\"/>\n";
}

void add_polygon(std::string& out, const Frame& f, const std::vector<QVec2>& vertices,
                 bool mirror, double axis_y, const char* cls) {
  out += "    <polygon class=\"" + std::string(cls) + "\" points=\"";
  bool first = true;
  for (const auto& v : vertices) {
    const double y = mirror ? 2 * axis_y - qy(v) : qy(v);
    if (!first) out += " ";
    out += fmt(f.px(qx(v))) + "," + fmt(f.py(y));
    first = false;
  }
  out += "\"/>\n";
}

void add_cross(std::string& out, const Frame& f, double x, double y, const char* cls) {
  const double cx = f.px(x), cy = f.py(y), r = 5.0;
  out += "    <path class=\"" + std::string(cls) + "\" d=\"M " + fmt(cx - r) + " " +
         fmt(cy - r) + " L " + fmt(cx + r) + " " + fmt(cy + r) + " M " + fmt(cx - r) +
         " " + fmt(cy + r) + " L " + fmt(cx + r) + " " + fmt(cy - r) + "\"/>\n";
}

void add_text(std::string& out, const Frame& f, double x, double y, double dx_px,
              double dy_px, const std::string& text, const char* cls) {
  out += "    <text class=\"" + std::string(cls) + "\" x=\"" + fmt(f.px(x) + dx_px) +
         "\" y=\"" + fmt(f.py(y) + dy_px) + "\">" + esc(text) + "</text>\n";
}

void add_curves(std::string& out, const Frame& f,
                const std::vector<std::vector<std::complex<double>>>& curves) {
  out += "  <g id=\"curves\">\n";
  for (const auto& c : curves) {
    if (c.size() < 2) continue;
    out += "    <polyline class=\"curve\" points=\"";
    bool first = true;
    for (const auto& z : c) {
      if (!first) out += " ";
      out += fmt(f.px(z.real())) + "," + fmt(f.py(z.imag()));
      first = false;
    }
    out += "\"/>\n";
  }
  out += "  </g>\n";
}

const char* ray_class(const Ray& r) {
  return r.tag == StructureTag::Symplectic ? "ray-symplectic" : "ray-complex";
}

// One segment per traced piece; sheet-1 pieces of a double are mirrored
// about the seam axis.
void add_ray(std::string& out, const Frame& f, const Ray& r, bool mirrored,
             double axis_y) {
  for (std::size_t i = 0; i + 1 < r.trace.size(); ++i) {
    const bool flip = mirrored && r.sheets[i] == 1;
    const double ay = flip ? 2 * axis_y - qy(r.trace[i]) : qy(r.trace[i]);
    const double by = flip ? 2 * axis_y - qy(r.trace[i + 1]) : qy(r.trace[i + 1]);
    add_line(out, f, qx(r.trace[i]), ay, qx(r.trace[i + 1]), by, ray_class(r));
  }
}

const char* kStyle =
    "  <style>\n"
    "    .boundary { fill: none; stroke: #333333; stroke-width: 2; }\n"
    "    .frame { fill: none; stroke: #bbbbbb; stroke-width: 1; }\n"
    "    .seam { stroke: #777777; stroke-width: 3; }\n"
    "    .cut { stroke: #888888; stroke-width: 1.5; stroke-dasharray: 6 4; }\n"
    "    .wall { stroke: #b8860b; stroke-width: 2.5; }\n"
    "    .ray-symplectic { fill: none; stroke: #b03030; stroke-width: 1.5; }\n"
    "    .ray-complex { fill: none; stroke: #3060b0; stroke-width: 1.5; }\n"
    "    .curve { fill: none; stroke: #6a2c91; stroke-width: 1.5; }\n"
    "    .marker { fill: none; stroke: #111111; stroke-width: 2; }\n"
    "    .marker-seam { fill: none; stroke: #0a7a3c; stroke-width: 2; }\n"
    "    .label { font: 13px sans-serif; fill: #222222; }\n"
    "    .chamber { font: italic 18px serif; fill: #222222; text-anchor: middle; }\n"
    "    .title { font: 15px sans-serif; fill: #222222; }\n"
    "  </style>\n";

std::string document(const Frame& f, const std::string& body, const std::string& title) {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    fmt(f.width()) + "\" height=\"" + fmt(f.height()) +
                    "\" viewBox=\"0 0 " + fmt(f.width()) + " " + fmt(f.height()) +
                    "\">\n";
  out += kStyle;
  if (!title.empty())
    out += "  <text class=\"title\" x=\"6.0000\" y=\"16.0000\">" + esc(title) +
           "</text>\n";
  out += body;
  out += "</svg>\n";
  return out;
}

RenderResult empty_document(const std::string& warning) {
  std::string safe = warning;
  std::size_t pos;
  while ((pos = safe.find("--")) != std::string::npos) safe.replace(pos, 2, ",");
  RenderResult r;
  r.warning = warning;
  r.svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\"><!-- " +
          safe + " --></svg>\n";
  return r;
}

// Chart figure: boundary polygon, dashed cuts, cross markers with id labels,
// rays. With a mirror axis the boundary, cuts, markers, and sheet-1 ray
// pieces repeat reflected, and the axis is drawn as the seam.
std::string chart_body(const Frame& f, const AffineBase& b,
                       const std::vector<SingularPoint>& seam_points,
                       const std::vector<Ray>& rays, bool mirrored, double axis_y) {
  std::string body;

  body += "  <g id=\"boundary\">\n";
  add_polygon(body, f, b.boundary.vertices, false, axis_y, "boundary");
  if (mirrored) add_polygon(body, f, b.boundary.vertices, true, axis_y, "boundary");
  body += "  </g>\n";

  if (mirrored) {
    body += "  <g id=\"seam\">\n";
    add_line(body, f, f.x0, axis_y, f.x1, axis_y, "seam");
    body += "  </g>\n";
  }

  body += "  <g id=\"cuts\">\n";
  for (const auto& p : b.points) {
    if (p.position == p.cut_to) continue;
    add_line(body, f, qx(p.position), qy(p.position), qx(p.cut_to), qy(p.cut_to),
             "cut");
    if (mirrored)
      add_line(body, f, qx(p.position), 2 * axis_y - qy(p.position), qx(p.cut_to),
               2 * axis_y - qy(p.cut_to), "cut");
  }
  body += "  </g>\n";

  body += "  <g id=\"rays\">\n";
  for (const auto& r : rays) add_ray(body, f, r, mirrored, axis_y);
  body += "  </g>\n";

  body += "  <g id=\"markers\">\n";
  for (const auto& p : b.points) {
    add_cross(body, f, qx(p.position), qy(p.position), "marker");
    if (mirrored)
      add_cross(body, f, qx(p.position), 2 * axis_y - qy(p.position), "marker");
  }
  for (const auto& s : seam_points) {
    add_cross(body, f, qx(s.position), qy(s.position), "marker-seam");
    if (mirrored)
      add_cross(body, f, qx(s.position), 2 * axis_y - qy(s.position), "marker-seam");
  }
  body += "  </g>\n";

  body += "  <g id=\"labels\">\n";
  for (const auto& p : b.points) {
    add_text(body, f, qx(p.position), qy(p.position), 7, -7, p.id, "label");
    if (mirrored)
      add_text(body, f, qx(p.position), 2 * axis_y - qy(p.position), 7, -7,
               p.id + "'", "label");
  }
  for (const auto& s : seam_points)
    add_text(body, f, qx(s.position), qy(s.position), 7, -7, s.id, "label");
  body += "  </g>\n";

  return body;
}

RenderResult render_chart(const AffineBase& b,
                          const std::vector<SingularPoint>& seam_points,
                          const std::vector<Ray>& rays,
                          const std::vector<std::vector<std::complex<double>>>& curves,
                          bool mirrored, const std::string& title) {
  Frame f;
  bool seeded = false;
  double axis_y = 0;
  for (const auto& v : b.boundary.vertices) {
    if (!seeded) {
      f.x0 = f.x1 = qx(v);
      f.y0 = f.y1 = qy(v);
      seeded = true;
    } else {
      f.grow(qx(v), qy(v));
    }
  }
  if (mirrored) {
    axis_y = f.y1;
    for (const auto& v : b.boundary.vertices) f.grow(qx(v), 2 * axis_y - qy(v));
  }
  for (const auto& c : curves)
    for (const auto& z : c) f.grow(z.real(), z.imag());
  std::string body = chart_body(f, b, seam_points, rays, mirrored, axis_y);
  if (!curves.empty()) add_curves(body, f, curves);
  RenderResult out;
  out.svg = document(f, body, title);
  return out;
}

RenderResult render_curves_only(
    const std::vector<std::vector<std::complex<double>>>& curves,
    const std::string& title) {
  Frame f;
  bool seeded = false;
  for (const auto& c : curves)
    for (const auto& z : c) {
      if (!seeded) {
        f.x0 = f.x1 = z.real();
        f.y0 = f.y1 = z.imag();
        seeded = true;
      } else {
        f.grow(z.real(), z.imag());
      }
    }
  std::string body;
  add_curves(body, f, curves);
  RenderResult out;
  out.svg = document(f, body, title);
  return out;
}

RenderResult render_walls(const WallScenario& s, const std::string& title) {
  Frame f;
  f.x0 = qx(s.frame_lo);
  f.y0 = qy(s.frame_lo);
  f.x1 = qx(s.frame_hi);
  f.y1 = qy(s.frame_hi);

  std::string body;
  body += "  <g id=\"boundary\">\n";
  std::vector<QVec2> frame_rect = {s.frame_lo,
                                   {s.frame_hi.x, s.frame_lo.y},
                                   s.frame_hi,
                                   {s.frame_lo.x, s.frame_hi.y}};
  add_polygon(body, f, frame_rect, false, 0, "frame");
  body += "  </g>\n";

  body += "  <g id=\"cuts\">\n";
  if (s.singular_position && s.cut_to)
    add_line(body, f, qx(*s.singular_position), qy(*s.singular_position), qx(*s.cut_to),
             qy(*s.cut_to), "cut");
  body += "  </g>\n";

  body += "  <g id=\"walls\">\n";
  for (const auto& w : s.walls)
    add_line(body, f, qx(w.support_a), qy(w.support_a), qx(w.support_b),
             qy(w.support_b), "wall");
  body += "  </g>\n";

  body += "  <g id=\"markers\">\n";
  if (s.singular_position)
    add_cross(body, f, qx(*s.singular_position), qy(*s.singular_position), "marker");
  body += "  </g>\n";

  body += "  <g id=\"labels\">\n";
  for (const auto& c : s.chambers)
    add_text(body, f, qx(c.point), qy(c.point), 0, 0, c.name, "chamber");
  for (const auto& w : s.walls) {
    const double mx = (qx(w.support_a) + qx(w.support_b)) / 2;
    const double my = (qy(w.support_a) + qy(w.support_b)) / 2;
    add_text(body, f, mx, my, 8, 4, w.name, "label");
  }
  body += "  </g>\n";

  RenderResult out;
  out.svg = document(f, body, title);
  return out;
}

}  // namespace

RenderResult render_svg(const SvgScene& scene) {
  if (scene.walls) return render_walls(*scene.walls, scene.title);
  if (scene.doubled) {
    if (scene.doubled->half.dimension != 2)
      return empty_document("nothing to draw: doubled base '" + scene.doubled->name +
                            "' has no planar chart");
    return render_chart(scene.doubled->half, scene.doubled->seam_points, scene.rays,
                        scene.curves, true, scene.title);
  }
  if (scene.base) {
    if (scene.base->dimension != 2)
      return empty_document("nothing to draw: base '" + scene.base->name +
                            "' has no planar chart");
    return render_chart(*scene.base, {}, scene.rays, scene.curves, false, scene.title);
  }
  bool has_points = false;
  for (const auto& c : scene.curves)
    if (c.size() >= 2) has_points = true;
  if (has_points) return render_curves_only(scene.curves, scene.title);
  return empty_document("nothing to draw: empty scene");
}

}  // namespace syz

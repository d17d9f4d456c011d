#include "gkz/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "gkz/polytope.hpp"

namespace gkz::svg {

namespace {

struct Pt {
  double x, y;
};

std::string num(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Pt point(const VectorS& v) { return {v[0].to_double(), v[1].to_double()}; }

Pt scaled(const VectorS& v, double len) {
  const Pt p = point(v);
  const double nrm = std::hypot(p.x, p.y);
  return {p.x / nrm * len, p.y / nrm * len};
}

class Canvas {
 public:
  explicit Canvas(const PlotSpec& spec) : spec_(spec) {
    const double w = (spec.xmax - spec.xmin).to_double(), h = (spec.ymax - spec.ymin).to_double();
    stroke_ = std::max(w, h) / 300;
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"480\" height=\""
         << num(480 * h / w) << "\" viewBox=\"" << num(spec.xmin.to_double()) << ' '
         << num(-spec.ymax.to_double()) << ' ' << num(w) << ' ' << num(h) << "\">\n"
         << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << num(stroke_) << "\">\n";
  }

  void line(Pt a, Pt b, bool dashed, const std::string& cls) {
    out_ << "<line class=\"" << cls << "\" x1=\"" << num(a.x) << "\" y1=\"" << num(-a.y) << "\" x2=\""
         << num(b.x) << "\" y2=\"" << num(-b.y) << '"' << dash(dashed) << "/>\n";
  }

  void polygon(const std::vector<Pt>& pts, const std::string& fill, const std::string& cls) {
    out_ << "<polygon class=\"" << cls << "\" fill=\"" << fill << "\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) out_ << (i ? " " : "") << num(pts[i].x) << ',' << num(-pts[i].y);
    out_ << "\"/>\n";
  }

  void dot(Pt p, const std::string& cls) {
    out_ << "<circle class=\"" << cls << "\" cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y) << "\" r=\""
         << num(3 * stroke_) << "\" fill=\"black\"/>\n";
  }

  void label(Pt p, const std::string& text) {
    out_ << "<text x=\"" << num(p.x) << "\" y=\"" << num(-p.y) << "\" font-size=\"" << num(12 * stroke_)
         << "\" fill=\"black\" stroke=\"none\">" << text << "</text>\n";
  }

  // Clip {x : a.x = c} to the viewport.
  std::optional<std::pair<Pt, Pt>> clip(Pt a, double c) const {
    const double x0 = spec_.xmin.to_double(), x1 = spec_.xmax.to_double();
    const double y0 = spec_.ymin.to_double(), y1 = spec_.ymax.to_double();
    std::vector<Pt> hits;
    if (a.y != 0)
      for (double x : {x0, x1}) {
        const double y = (c - a.x * x) / a.y;
        if (y >= y0 && y <= y1) hits.push_back({x, y});
      }
    if (a.x != 0)
      for (double y : {y0, y1}) {
        const double x = (c - a.y * y) / a.x;
        if (x >= x0 && x <= x1) hits.push_back({x, y});
      }
    if (hits.size() < 2) return std::nullopt;
    auto key = [&](Pt p) { return -a.y * p.x + a.x * p.y; };
    const auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(),
                                              [&](Pt p, Pt q) { return key(p) < key(q); });
    return std::pair{*lo, *hi};
  }

  std::string finish() {
    out_ << "</g>\n</svg>\n";
    return out_.str();
  }

 private:
  std::string dash(bool dashed) const {
    if (!dashed || !spec_.dashed_virtual) return "";
    return " stroke-dasharray=\"" + num(4 * stroke_) + ',' + num(3 * stroke_) + '"';
  }

  const PlotSpec& spec_;
  double stroke_ = 0;
  std::ostringstream out_;
};

// Angular order around the origin.
void sort_by_angle(std::vector<Pt>& pts, Pt center) {
  std::sort(pts.begin(), pts.end(), [&](Pt p, Pt q) {
    return std::atan2(p.y - center.y, p.x - center.x) < std::atan2(q.y - center.y, q.x - center.x);
  });
}

void require_d2(int d, const char* what) {
  if (d != 2) throw InvalidInput(std::string(what) + " plots need dimension 2");
}

}  // namespace

PlotKind kind_from_string(const std::string& s) {
  if (s == "polytope") return PlotKind::Polytope;
  if (s == "fan") return PlotKind::Fan;
  if (s == "secondary") return PlotKind::Secondary;
  throw InvalidInput("unknown plot kind \"" + s + "\"");
}

std::string to_string(PlotKind k) {
  switch (k) {
    case PlotKind::Polytope: return "polytope";
    case PlotKind::Fan: return "fan";
    case PlotKind::Secondary: return "secondary";
  }
  return "?";
}

void PlotSpec::validate() const {
  if (xmin >= xmax || ymin >= ymax) throw InvalidInput("degenerate viewport");
  if (ray_length.sign() <= 0) throw InvalidInput("ray length must be positive");
}

std::string plot_polytope(const Calibration& c, const VectorS& b, const PlotSpec& spec) {
  spec.validate();
  require_d2(c.d, "polytope");
  const HPolytope p = analyze(c, b);
  Canvas cv(spec);
  std::vector<Pt> verts;
  Pt center{0, 0};
  for (const auto& v : p.vertices) {
    verts.push_back(point(v.x));
    center.x += verts.back().x / static_cast<double>(p.vertices.size());
    center.y += verts.back().y / static_cast<double>(p.vertices.size());
  }
  sort_by_angle(verts, center);
  if (verts.size() >= 3) cv.polygon(verts, "#dde8f4", "polytope");
  for (int i = 0; i < c.n; ++i) {
    const bool virt = p.facet_dims[i] < c.d - 1 || c.virtual_set.contains(i);
    // <x, h_i> = -b_i
    if (const auto seg = cv.clip(point(c.column(i)), -b[i].to_double())) {
      cv.line(seg->first, seg->second, virt, virt ? "constraint virtual" : "constraint");
      const Pt h = point(c.column(i));
      const double t = -b[i].to_double() / (h.x * h.x + h.y * h.y);
      cv.label({h.x * t, h.y * t}, std::to_string(i + 1));
    }
  }
  for (const auto& v : verts) cv.dot(v, "vertex");
  return cv.finish();
}

std::string plot_fan(const QuantumFan& f, const PlotSpec& spec) {
  spec.validate();
  require_d2(f.d(), "fan");
  const double len = spec.ray_length.to_double();
  Canvas cv(spec);
  const Calibration& c = f.calibration;
  for (IndexSet s : f.max_cones) {
    const auto el = s.elements();
    if (el.size() != 2) continue;
    cv.polygon({{0, 0}, scaled(c.column(el[0]), len), scaled(c.column(el[1]), len)}, "#eeeeee", "cone");
  }
  const IndexSet used = f.rays();
  for (int i = 0; i < c.n; ++i) {
    const bool virt = f.virtual_set.contains(i) || !used.contains(i);
    const Pt tip = scaled(c.column(i), len);
    cv.line({0, 0}, tip, virt, virt ? "ray virtual" : "ray");
    cv.label({tip.x * 1.08, tip.y * 1.08}, std::to_string(i + 1));
  }
  cv.dot({0, 0}, "origin");
  return cv.finish();
}

std::string plot_secondary(const GaleData& g, const SecondaryFan& sf, const std::vector<VectorS>& marked,
                           const PlotSpec& spec) {
  spec.validate();
  if (g.r != 2) throw InvalidInput("secondary plots need n - d = 2");
  const double len = spec.ray_length.to_double();
  Canvas cv(spec);
  const std::array<const char*, 2> fills{"#dde8f4", "#f4e8dd"};
  // Alternate fills in angular order so neighbouring chambers differ.
  std::vector<std::size_t> order(sf.chambers.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto angle = [&](std::size_t i) {
    const Pt p = point(sf.chambers[i].rep_point);
    return std::atan2(p.y, p.x);
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return angle(a) < angle(b); });
  for (std::size_t t = 0; t < order.size(); ++t) {
    const auto& rays = sf.chambers[order[t]].rays;
    if (rays.size() != 2) continue;
    cv.polygon({{0, 0}, scaled(rays[0], len), scaled(rays[1], len)}, fills[t % 2], "chamber");
  }
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    const Pt tip = scaled(g.generators[i], len);
    cv.line({0, 0}, tip, false, "generator");
    cv.label({tip.x * 1.08, tip.y * 1.08}, std::to_string(i + 1));
  }
  for (const auto& m : marked) {
    if (m.size() != 2) throw InvalidInput("marked points need two coordinates");
    cv.dot(point(m), "marked");
  }
  return cv.finish();
}

}  // namespace gkz::svg

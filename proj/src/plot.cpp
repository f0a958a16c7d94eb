#include "folcone/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

namespace folcone {

namespace {

constexpr double kCanvas = 520.0;
constexpr double kCenter = 260.0;
constexpr double kRadius = 200.0;
constexpr double kLegendLine = 18.0;

constexpr std::array<const char*, 8> kPalette = {"#8dd3c7", "#fdb462", "#bebada", "#fb8072",
                                                 "#80b1d3", "#b3de69", "#fccde5", "#ffffb3"};

struct Pt {
  double x = 0;
  double y = 0;
};

std::string num(double v) {
  if (std::fabs(v) < 0.005) {
    v = 0.0;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

double angle_of(const IntVector& v) { return std::atan2(v[1].get_d(), v[0].get_d()); }

double cross(const IntVector& a, const IntVector& b) {
  return Int(a[0] * b[1] - a[1] * b[0]).get_d();
}

/// Canvas point at polar (angle, r), y pointing up.
Pt polar(double angle, double r) { return {kCenter + r * std::cos(angle), kCenter - r * std::sin(angle)}; }

class Svg {
 public:
  Svg(double width, double height) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
         << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
    out_ << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
            "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333\"/></marker></defs>\n";
    out_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }
  void raw(const std::string& s) { out_ << s << "\n"; }
  void text(Pt p, const std::string& s, const char* anchor = "middle") {
    out_ << "<text x=\"" << num(p.x) << "\" y=\"" << num(p.y) << "\" font-family=\"sans-serif\" font-size=\"13\" "
         << "text-anchor=\"" << anchor << "\" dominant-baseline=\"middle\">" << xml_escape(s) << "</text>\n";
  }
  void arrow(Pt from, Pt to) {
    out_ << "<line x1=\"" << num(from.x) << "\" y1=\"" << num(from.y) << "\" x2=\"" << num(to.x) << "\" y2=\""
         << num(to.y) << "\" stroke=\"#333\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
  }
  void polygon(const std::vector<Pt>& pts, const std::string& style) {
    out_ << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out_ << (i ? " " : "") << num(pts[i].x) << "," << num(pts[i].y);
    }
    out_ << "\" " << style << "/>\n";
  }
  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
};

std::string fill_style(std::size_t i) {
  return std::string("fill=\"") + kPalette[i % kPalette.size()] + "\" fill-opacity=\"0.6\" stroke=\"#555\"";
}

void legend(Svg& svg, const Fan& fan, double top) {
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const double y = top + kLegendLine * static_cast<double>(i);
    svg.raw("<rect x=\"20\" y=\"" + num(y - 6) + "\" width=\"12\" height=\"12\" " + fill_style(i) + "/>");
    svg.text({40, y}, "C" + std::to_string(i + 1) + ": " + fan.cones[i].name, "start");
  }
}

/// Sector of a full-dimensional planar cone as ccw angles [from, from + span].
std::pair<double, double> sector(const Cone& c) {
  if (c.is_pointed()) {
    IntVector a = c.rays()[0], b = c.rays()[1];
    if (cross(a, b) < 0) {
      std::swap(a, b);
    }
    double span = angle_of(b) - angle_of(a);
    if (span <= 0) {
      span += 2 * std::numbers::pi;
    }
    return {angle_of(a), span};
  }
  // Half-plane: start on the boundary line so the ray lies ccw of it.
  IntVector d = c.lineality()[0];
  if (cross(d, c.rays()[0]) < 0) {
    d = negated(d);
  }
  return {angle_of(d), std::numbers::pi};
}

std::string plot_planar(const Fan& fan, const LabelSet& labels, const PLBall* ball) {
  const double height = kCanvas + kLegendLine * static_cast<double>(fan.cones.size()) + 10;
  Svg svg(kCanvas, height);
  std::set<IntVector> rays;
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const Cone& c = fan.cones[i].cone;
    if (c.is_full_space()) {
      svg.raw("<circle cx=\"" + num(kCenter) + "\" cy=\"" + num(kCenter) + "\" r=\"" + num(kRadius) + "\" " +
              fill_style(i) + "/>");
      svg.text({kCenter, kCenter - kRadius / 2}, "C" + std::to_string(i + 1));
      continue;
    }
    const auto [from, span] = sector(c);
    const Pt p1 = polar(from, kRadius), p2 = polar(from + span, kRadius);
    const bool large = span > std::numbers::pi + 1e-9;
    svg.raw("<path d=\"M" + num(kCenter) + "," + num(kCenter) + " L" + num(p1.x) + "," + num(p1.y) + " A" +
            num(kRadius) + "," + num(kRadius) + " 0 " + (large ? "1" : "0") + " 0 " + num(p2.x) + "," +
            num(p2.y) + " Z\" " + fill_style(i) + "/>");
    svg.text(polar(from + span / 2, kRadius * 0.55), "C" + std::to_string(i + 1));
    for (const auto& r : c.generators()) {
      rays.insert(r);
    }
  }
  if (ball != nullptr) {
    std::vector<std::pair<double, RatVector>> vs;
    double max_norm = 0;
    for (const auto& v : ball->vertices()) {
      const double x = v[0].get_d(), y = v[1].get_d();
      vs.emplace_back(std::atan2(y, x), v);
      max_norm = std::max(max_norm, std::hypot(x, y));
    }
    std::sort(vs.begin(), vs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    const double scale = kRadius * 0.75 / max_norm;
    std::vector<Pt> pts;
    for (const auto& [a, v] : vs) {
      pts.push_back({kCenter + scale * v[0].get_d(), kCenter - scale * v[1].get_d()});
    }
    svg.polygon(pts, "fill=\"none\" stroke=\"#000\" stroke-width=\"1.2\" stroke-dasharray=\"6,4\"");
  }
  for (const auto& r : rays) {
    const double a = angle_of(r);
    svg.arrow({kCenter, kCenter}, polar(a, kRadius));
    svg.text(polar(a, kRadius + 22), render_ray(labels, r));
  }
  legend(svg, fan, kCanvas);
  return svg.finish();
}

using Vec3 = std::array<double, 3>;

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 normalized3(Vec3 v) {
  const double n = std::sqrt(dot3(v, v));
  return {v[0] / n, v[1] / n, v[2] / n};
}

std::string plot_sliced(const Fan& fan, const LabelSet& labels, const RatVector& f) {
  // Orthonormal frame of the plane orthogonal to f.
  const Vec3 n = normalized3({f[0].get_d(), f[1].get_d(), f[2].get_d()});
  std::size_t axis = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (std::fabs(n[i]) < std::fabs(n[axis])) {
      axis = i;
    }
  }
  Vec3 e{0, 0, 0};
  e[axis] = 1;
  const double t = dot3(e, n);
  const Vec3 u = normalized3({e[0] - t * n[0], e[1] - t * n[1], e[2] - t * n[2]});
  const Vec3 w{n[1] * u[2] - n[2] * u[1], n[2] * u[0] - n[0] * u[2], n[0] * u[1] - n[1] * u[0]};

  struct Poly {
    std::vector<std::pair<Pt, IntVector>> corners;
  };
  std::vector<Poly> polys;
  for (const auto& fc : fan.cones) {
    const Cone& c = fc.cone;
    if (!c.is_pointed()) {
      throw InputError("cone \"" + fc.name + "\" contains a line; its slice is unbounded");
    }
    Poly poly;
    for (const auto& r : c.rays()) {
      const Rat h = dot(f, to_rat(r));
      if (h <= 0) {
        throw InputError("slice does not meet cone \"" + fc.name + "\" in a bounded polygon");
      }
      const Vec3 p{Rat(r[0] / h).get_d(), Rat(r[1] / h).get_d(), Rat(r[2] / h).get_d()};
      poly.corners.push_back({{dot3(p, u), dot3(p, w)}, r});
    }
    Pt mid;
    for (const auto& [p, r] : poly.corners) {
      mid.x += p.x / static_cast<double>(poly.corners.size());
      mid.y += p.y / static_cast<double>(poly.corners.size());
    }
    std::sort(poly.corners.begin(), poly.corners.end(), [&](const auto& a, const auto& b) {
      return std::atan2(a.first.y - mid.y, a.first.x - mid.x) < std::atan2(b.first.y - mid.y, b.first.x - mid.x);
    });
    polys.push_back(std::move(poly));
  }
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  bool first = true;
  for (const auto& poly : polys) {
    for (const auto& [p, r] : poly.corners) {
      lo_x = first ? p.x : std::min(lo_x, p.x);
      hi_x = first ? p.x : std::max(hi_x, p.x);
      lo_y = first ? p.y : std::min(lo_y, p.y);
      hi_y = first ? p.y : std::max(hi_y, p.y);
      first = false;
    }
  }
  const double extent = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double scale = 2 * kRadius / extent;
  auto place = [&](Pt p) {
    return Pt{kCenter + scale * (p.x - (lo_x + hi_x) / 2), kCenter - scale * (p.y - (lo_y + hi_y) / 2)};
  };

  const double height = kCanvas + kLegendLine * static_cast<double>(fan.cones.size()) + 10;
  Svg svg(kCanvas, height);
  std::set<IntVector> drawn;
  std::vector<std::pair<Pt, std::string>> vertex_labels;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::vector<Pt> pts;
    Pt mid;
    for (const auto& [p, r] : polys[i].corners) {
      const Pt q = place(p);
      pts.push_back(q);
      mid.x += q.x / static_cast<double>(polys[i].corners.size());
      mid.y += q.y / static_cast<double>(polys[i].corners.size());
      if (drawn.insert(r).second) {
        vertex_labels.push_back({q, render_ray(labels, r)});
      }
    }
    svg.polygon(pts, fill_style(i));
    svg.text(mid, "C" + std::to_string(i + 1));
  }
  for (const auto& [q, label] : vertex_labels) {
    svg.raw("<circle cx=\"" + num(q.x) + "\" cy=\"" + num(q.y) + "\" r=\"3\" fill=\"#333\"/>");
    svg.text({q.x, q.y - 12}, label);
  }
  legend(svg, fan, kCanvas);
  return svg.finish();
}

}  // namespace

std::string plot_fan(const Fan& fan, const LabelSet& labels, const PlotOptions& options) {
  if (fan.cones.empty()) {
    throw InputError("empty fan: nothing to plot");
  }
  const std::size_t d = fan.dim;
  if (options.slice) {
    if (d != 3) {
      throw InputError("--slice applies to 3-dimensional fans, this fan has dim " + std::to_string(d));
    }
    if (options.slice->size() != 3) {
      throw InputError("--slice needs 3 entries");
    }
    if (is_zero(*options.slice)) {
      throw InputError("--slice must be nonzero");
    }
    if (options.ball != nullptr) {
      throw InputError("ball overlay needs a 2-dimensional fan");
    }
    return plot_sliced(fan, labels, *options.slice);
  }
  if (d >= 3) {
    throw InputError("fan has dim " + std::to_string(d) + ": supply --slice");
  }
  if (d != 2) {
    throw InputError("plots need a fan of dim 2, or dim 3 with --slice");
  }
  if (options.ball != nullptr && options.ball->dim() != 2) {
    throw InputError("ball dimension does not match the fan");
  }
  return plot_planar(fan, labels, options.ball);
}

}  // namespace folcone

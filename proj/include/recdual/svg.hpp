#pragma once

/// \file svg.hpp
/// SVG 1.1 pictures of duals and partial duals. Output depends only on the
/// input, so equal input gives byte-equal files.

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "recdual/geometry.hpp"
#include "recdual/rel.hpp"

namespace recdual {

struct SvgOptions {
  bool labels = false;
  const Rel* rel = nullptr;   // blue and red contact segments when set
  std::vector<Rect> strips;   // drawn dashed
  std::vector<VertexId> fixed;  // drawn solid, the rest pale
  double scale = 40;
};

namespace detail {

inline std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

}  // namespace detail

inline std::string render_svg(const std::map<VertexId, Rect>& rects, const SvgOptions& opt = {}) {
  std::ostringstream os;
  Rect box{0, 1, 0, 1};
  bool first = true;
  auto grow = [&](const Rect& r) {
    if (first) box = r, first = false;
    box.x1 = std::min(box.x1, r.x1), box.x2 = std::max(box.x2, r.x2);
    box.y1 = std::min(box.y1, r.y1), box.y2 = std::max(box.y2, r.y2);
  };
  for (const auto& [v, r] : rects) grow(r);
  for (const Rect& r : opt.strips) grow(r);
  const double s = opt.scale, pad = 10;
  auto X = [&](const Rational& x) { return detail::svg_num(pad + (x - box.x1).to_double() * s); };
  auto Y = [&](const Rational& y) { return detail::svg_num(pad + (box.y2 - y).to_double() * s); };
  const std::string w = detail::svg_num(2 * pad + (box.x2 - box.x1).to_double() * s);
  const std::string h = detail::svg_num(2 * pad + (box.y2 - box.y1).to_double() * s);

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  const bool any_fixed = !opt.fixed.empty();
  for (const auto& [v, r] : rects) {
    const bool solid = !any_fixed || std::find(opt.fixed.begin(), opt.fixed.end(), v) != opt.fixed.end();
    os << "  <rect id=\"v" << v << "\" x=\"" << X(r.x1) << "\" y=\"" << Y(r.y2) << "\" width=\""
       << detail::svg_num((r.x2 - r.x1).to_double() * s) << "\" height=\""
       << detail::svg_num((r.y2 - r.y1).to_double() * s) << "\" fill=\"" << (solid ? "#d9d9d9" : "#f4f4f4")
       << "\" stroke=\"#000\" stroke-width=\"1\"/>\n";
  }
  for (const Rect& r : opt.strips) {
    os << "  <polygon points=\"" << X(r.x1) << "," << Y(r.y1) << " " << X(r.x2) << "," << Y(r.y1) << " " << X(r.x2)
       << "," << Y(r.y2) << " " << X(r.x1) << "," << Y(r.y2)
       << "\" fill=\"none\" stroke=\"#555\" stroke-dasharray=\"4 3\"/>\n";
  }
  if (opt.rel) {
    for (const LabeledEdge& e : opt.rel->edges) {
      auto a = rects.find(e.from), b = rects.find(e.to);
      if (a == rects.end() || b == rects.end()) continue;
      const Rect &u = a->second, &v = b->second;
      const bool blue = e.layer == Layer::kVertical;
      // Blue: u below v along a horizontal segment. Red: u left of v.
      Rational lo = blue ? std::max(u.x1, v.x1) : std::max(u.y1, v.y1);
      Rational hi = blue ? std::min(u.x2, v.x2) : std::min(u.y2, v.y2);
      if (!(lo < hi)) continue;
      os << "  <line x1=\"" << (blue ? X(lo) : X(u.x2)) << "\" y1=\"" << (blue ? Y(u.y2) : Y(lo)) << "\" x2=\""
         << (blue ? X(hi) : X(u.x2)) << "\" y2=\"" << (blue ? Y(u.y2) : Y(hi)) << "\" stroke=\""
         << (blue ? "#1f4fd1" : "#d12a1f") << "\" stroke-width=\"3\"/>\n";
    }
  }
  if (opt.labels) {
    for (const auto& [v, r] : rects) {
      const Rational two(2);
      os << "  <text x=\"" << X((r.x1 + r.x2) / two) << "\" y=\"" << Y((r.y1 + r.y2) / two)
         << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
         << v << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

inline std::string render_svg(const Dual& d, const SvgOptions& opt = {}) {
  std::map<VertexId, Rect> m;
  for (VertexId v = 0; v < static_cast<VertexId>(d.rects.size()); ++v) m[v] = d[v];
  return render_svg(m, opt);
}

inline std::string render_svg(const PartialDual& p, const SvgOptions& opt = {}) { return render_svg(p.fixed, opt); }

}  // namespace recdual

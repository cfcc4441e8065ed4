#pragma once

/// \file frame.hpp
/// Completing a partial dual with the four outer rectangles.

#include <optional>
#include <string>

#include "recdual/errors.hpp"
#include "recdual/geometry.hpp"
#include "recdual/outcome.hpp"
#include "recdual/plane_graph.hpp"

namespace recdual {

/// Interior of the frame: the area between the four outer rectangles.
inline Rect frame_interior(const PartialDual& p, const OuterQuad& o) {
  return Rect{p.at(o.west).x2, p.at(o.east).x1, p.at(o.south).y2, p.at(o.north).y1};
}

/// Throws InvalidInput unless the four outer rectangles form a pinwheel
/// (vS owns the lower left corner) enclosing every inner fixed rectangle.
inline void check_frame(const PlaneGraph& g, const PartialDual& p) {
  const OuterQuad& o = g.outer();
  const Rect& w = p.at(o.west);
  const Rect& s = p.at(o.south);
  const Rect& e = p.at(o.east);
  const Rect& n = p.at(o.north);
  bool ok = w.x1 == s.x1 && s.y1 == e.y1 && e.x2 == n.x2 && n.y2 == w.y2 &&  // outer border
            s.y2 == w.y1 && s.x2 == e.x1 && e.y2 == n.y1 && n.x1 == w.x2 &&   // pinwheel joints
            w.x2 < e.x1 && s.y2 < n.y1;
  if (!ok) throw InvalidInput("fixed outer rectangles do not form a frame");
  Rect in = frame_interior(p, o);
  for (const auto& [v, r] : p.fixed) {
    if (g.is_outer(v)) continue;
    if (r.x1 < in.x1 || r.x2 > in.x2 || r.y1 < in.y1 || r.y2 > in.y2)
      throw InvalidInput("fixed rectangle of " + std::to_string(v) + " lies outside the frame");
  }
}

/// Returns p with vW, vS, vE, vN fixed. A given frame is only checked.
/// Otherwise the frame hugs the fixed rectangles: a side of the interior
/// lies on the bounding box of P when some fixed rectangle is adjacent to
/// that outer vertex, and one unit beyond it otherwise. Infeasible when the
/// fixed rectangles adjacent to an outer vertex cannot all touch it.
/// Partially fixed frames are rejected.
inline Outcome<PartialDual> ensure_frame(const PlaneGraph& g, const PartialDual& p) {
  const OuterQuad& o = g.outer();
  int outer_fixed = 0;
  for (VertexId v : o.as_array()) outer_fixed += p.contains(v) ? 1 : 0;
  if (outer_fixed == 4) {
    check_frame(g, p);
    return p;
  }
  if (outer_fixed != 0) throw InvalidInput("either all four outer rectangles are fixed or none");
  PartialDual out = p;
  Rational xl(1), xr(2), yb(1), yt(2);
  if (!p.fixed.empty()) {
    Rect box = p.fixed.begin()->second;
    for (const auto& [v, r] : p.fixed) {
      box.x1 = std::min(box.x1, r.x1);
      box.x2 = std::max(box.x2, r.x2);
      box.y1 = std::min(box.y1, r.y1);
      box.y2 = std::max(box.y2, r.y2);
    }
    // For each outer vertex: is some fixed rectangle adjacent to it, and do
    // exactly the adjacent ones reach the bounding box side?
    struct Side {
      VertexId outer;
      Rational edge;
      Rational Rect::*coord;
      Rational* target;
      int away;  // -1: interior side moves left/down when nothing touches
    };
    Side sides[4] = {{o.west, box.x1, &Rect::x1, &xl, -1},
                     {o.east, box.x2, &Rect::x2, &xr, +1},
                     {o.south, box.y1, &Rect::y1, &yb, -1},
                     {o.north, box.y2, &Rect::y2, &yt, +1}};
    for (Side& s : sides) {
      bool any = false;
      for (const auto& [v, r] : p.fixed) any = any || g.adjacent(v, s.outer);
      *s.target = any ? s.edge : s.edge + Rational(s.away);
      for (const auto& [v, r] : p.fixed) {
        bool on = r.*(s.coord) == *s.target;
        if (on != g.adjacent(v, s.outer))
          return Infeasible{"fixed rectangle of " + std::to_string(v) +
                                (on ? " lies on the frame side of a non-adjacent outer vertex "
                                    : " cannot reach adjacent outer vertex ") +
                                std::to_string(s.outer),
                            {}};
      }
    }
  }
  const Rational one(1);
  out.fixed[o.west] = Rect{xl - one, xl, yb, yt + one};
  out.fixed[o.south] = Rect{xl - one, xr, yb - one, yb};
  out.fixed[o.east] = Rect{xr, xr + one, yb - one, yt};
  out.fixed[o.north] = Rect{xl, xr + one, yt, yt + one};
  return out;
}

}  // namespace recdual

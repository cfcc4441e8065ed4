#pragma once

/// \file geometry.hpp
/// Axis-aligned rectangles with exact coordinates, partial and total
/// rectangular duals, and the contact predicate shared by all modules.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recdual/plane_graph.hpp"
#include "recdual/rational.hpp"

namespace recdual {

/// [x1, x2] x [y1, y2]: left, right, bottom, top.
struct Rect {
  Rational x1, x2, y1, y2;

  Rational width() const { return x2 - x1; }
  Rational height() const { return y2 - y1; }
  Rational area() const { return width() * height(); }
  bool nondegenerate() const { return x1 < x2 && y1 < y2; }
  friend bool operator==(const Rect&, const Rect&) = default;

  std::string str() const {
    return "[" + x1.str() + "," + x2.str() + "]x[" + y1.str() + "," + y2.str() + "]";
  }
};

/// Prescribed rectangles on a subset U of the vertices.
struct PartialDual {
  std::map<VertexId, Rect> fixed;

  bool contains(VertexId v) const { return fixed.count(v) != 0; }
  const Rect& at(VertexId v) const { return fixed.at(v); }
  std::size_t size() const { return fixed.size(); }
  friend bool operator==(const PartialDual&, const PartialDual&) = default;
};

/// One rectangle per vertex.
struct Dual {
  std::vector<Rect> rects;

  const Rect& operator[](VertexId v) const { return rects[v]; }
  Rect& operator[](VertexId v) { return rects[v]; }
  friend bool operator==(const Dual&, const Dual&) = default;

  Rect bounding_box() const {
    Rect box = rects.front();
    for (const Rect& r : rects) {
      box.x1 = std::min(box.x1, r.x1);
      box.x2 = std::max(box.x2, r.x2);
      box.y1 = std::min(box.y1, r.y1);
      box.y2 = std::max(box.y2, r.y2);
    }
    return box;
  }
};

inline Rational overlap_length(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2) {
  Rational len = std::min(a2, b2) - std::max(a1, b1);
  return len > Rational(0) ? len : Rational(0);
}

/// Orientation of a positive-length contact between two rectangles.
enum class ContactKind { kNone, kLeftOf, kRightOf, kBelow, kAbove };

/// How `a` relates to `b`: kLeftOf when a's right side touches b's left
/// side along a segment of positive length, kBelow when a's top touches b's
/// bottom, and so on. Corner-only touching is kNone.
inline ContactKind contact(const Rect& a, const Rect& b) {
  const Rational zero(0);
  if (a.x2 == b.x1 && overlap_length(a.y1, a.y2, b.y1, b.y2) > zero) return ContactKind::kLeftOf;
  if (b.x2 == a.x1 && overlap_length(a.y1, a.y2, b.y1, b.y2) > zero) return ContactKind::kRightOf;
  if (a.y2 == b.y1 && overlap_length(a.x1, a.x2, b.x1, b.x2) > zero) return ContactKind::kBelow;
  if (b.y2 == a.y1 && overlap_length(a.x1, a.x2, b.x1, b.x2) > zero) return ContactKind::kAbove;
  return ContactKind::kNone;
}

inline bool interiors_overlap(const Rect& a, const Rect& b) {
  const Rational zero(0);
  return overlap_length(a.x1, a.x2, b.x1, b.x2) > zero && overlap_length(a.y1, a.y2, b.y1, b.y2) > zero;
}

namespace fixtures {

/// Pinwheel dual of g0(): vS owns the lower left corner.
inline Dual d0() {
  Dual d;
  d.rects = {Rect{1, 3, 2, 3}, Rect{2, 3, 0, 2}, Rect{0, 2, 0, 1}, Rect{0, 1, 1, 3}, Rect{1, 2, 1, 2}};
  return d;
}

/// Dual of g1() with a = 4 left of b = 5.
inline Dual d1() {
  Dual d;
  d.rects = {Rect{1, 4, 2, 3}, Rect{3, 4, 0, 2}, Rect{0, 3, 0, 1}, Rect{0, 1, 1, 3}, Rect{1, 2, 1, 2}, Rect{2, 3, 1, 2}};
  return d;
}

/// The frame of d1() plus a.
inline PartialDual p1() {
  PartialDual p;
  Dual d = d1();
  for (VertexId v : {kN, kE, kS, kW, VertexId{4}}) p.fixed[v] = d[v];
  return p;
}

}  // namespace fixtures

}  // namespace recdual

#pragma once

#include <compare>
#include <optional>

#include "segcalc/cusp.hpp"

namespace segcalc {

// The run line[b], line[b+1], ..., line[e]; never empty.
struct Segment {
  LineId line = 0;
  int b = 0;
  int e = 0;

  // Throws InvalidSegment when e < b.
  static Segment make(LineId line, int b, int e);
  static Segment point(CuspPoint p) { return {p.line, p.index, p.index}; }

  int length() const { return e - b + 1; }
  CuspPoint begin_point() const { return {line, b}; }
  CuspPoint end_point() const { return {line, e}; }
  bool contains(CuspPoint p) const { return p.line == line && b <= p.index && p.index <= e; }
  Segment shifted(int k) const { return {line, b + k, e + k}; }

  auto operator<=>(const Segment&) const = default;
};

std::optional<Segment> lshrink(const Segment& s);  // [b+1, e]
std::optional<Segment> minus(const Segment& s);    // [b, e-1]
inline Segment lextend(const Segment& s) { return {s.line, s.b - 1, s.e}; }
inline Segment plus(const Segment& s) { return {s.line, s.b, s.e + 1}; }

struct SegmentInfo {
  int length = 0;
  int deg = 0;
  CuspPoint b;
  CuspPoint e;
  std::optional<Segment> lshrink;
  std::optional<Segment> minus;
  Segment lextend;
  Segment plus;
  Segment shift_left;
  Segment shift_right;
};

SegmentInfo seg_basic(const CuspContext& ctx, const Segment& s);

Rational expo_seg(const CuspContext& ctx, const Segment& s);
Segment tilde_seg(const CuspContext& ctx, const Segment& s);

// s1 precedes s2: same line, b1 < b2 <= e1 + 1 and e1 < e2.
bool precedes(const Segment& s1, const Segment& s2);
inline bool linked(const Segment& s1, const Segment& s2) {
  return precedes(s1, s2) || precedes(s2, s1);
}

// Throws NotCombinable when the lines differ or the union has a gap.
Segment seg_union(const Segment& s1, const Segment& s2);
std::optional<Segment> seg_intersection(const Segment& s1, const Segment& s2);

}  // namespace segcalc

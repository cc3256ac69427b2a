#include "segcalc/segment.hpp"

#include <algorithm>
#include <string>

#include "segcalc/error.hpp"

namespace segcalc {

Segment Segment::make(LineId line, int b, int e) {
  if (e < b) {
    throw Error(ErrorCode::InvalidSegment,
                "end index " + std::to_string(e) + " is below begin index " + std::to_string(b));
  }
  return {line, b, e};
}

std::optional<Segment> lshrink(const Segment& s) {
  if (s.b == s.e) return std::nullopt;
  return Segment{s.line, s.b + 1, s.e};
}

std::optional<Segment> minus(const Segment& s) {
  if (s.b == s.e) return std::nullopt;
  return Segment{s.line, s.b, s.e - 1};
}

SegmentInfo seg_basic(const CuspContext& ctx, const Segment& s) {
  return {s.length(),     s.length() * ctx.deg(s.line),
          s.begin_point(), s.end_point(),
          lshrink(s),     minus(s),
          lextend(s),     plus(s),
          s.shifted(-1),  s.shifted(1)};
}

Rational expo_seg(const CuspContext& ctx, const Segment& s) {
  return (expo_point(ctx, s.begin_point()) + expo_point(ctx, s.end_point())) / 2;
}

Segment tilde_seg(const CuspContext& ctx, const Segment& s) {
  const CuspPoint nb = tilde_point(ctx, s.end_point());
  const CuspPoint ne = tilde_point(ctx, s.begin_point());
  return {nb.line, nb.index, ne.index};
}

bool precedes(const Segment& s1, const Segment& s2) {
  return s1.line == s2.line && s1.b < s2.b && s2.b <= s1.e + 1 && s1.e < s2.e;
}

Segment seg_union(const Segment& s1, const Segment& s2) {
  if (s1.line != s2.line || std::max(s1.b, s2.b) > std::min(s1.e, s2.e) + 1) {
    throw Error(ErrorCode::NotCombinable, "union of the two segments is not a segment");
  }
  return {s1.line, std::min(s1.b, s2.b), std::max(s1.e, s2.e)};
}

std::optional<Segment> seg_intersection(const Segment& s1, const Segment& s2) {
  if (s1.line != s2.line) return std::nullopt;
  const int b = std::max(s1.b, s2.b);
  const int e = std::min(s1.e, s2.e);
  if (e < b) return std::nullopt;
  return Segment{s1.line, b, e};
}

}  // namespace segcalc

#include "support.hpp"

#include <set>

#include "segcalc/error.hpp"
#include "segcalc/segment.hpp"

using namespace segcalc;
using namespace segcalc::test;

namespace {

std::set<int> points_of(const Segment& s) {
  std::set<int> out;
  for (int i = s.b; i <= s.e; ++i) out.insert(i);
  return out;
}

// Linkage from the point sets: the union is a run and neither contains the other.
bool linked_by_sets(const Segment& a, const Segment& b) {
  const auto pa = points_of(a);
  const auto pb = points_of(b);
  std::set<int> u = pa;
  u.insert(pb.begin(), pb.end());
  const bool run = *u.rbegin() - *u.begin() + 1 == static_cast<int>(u.size());
  const bool a_in_b = std::includes(pb.begin(), pb.end(), pa.begin(), pa.end());
  const bool b_in_a = std::includes(pa.begin(), pa.end(), pb.begin(), pb.end());
  return run && !a_in_b && !b_in_a;
}

}  // namespace

TEST_CASE("segment basics") {
  const auto ctx = CuspContext::self_dual_line();
  const auto info = seg_basic(ctx, seg(ctx, "[r[0],r[2]]"));
  CHECK(info.length == 3);
  CHECK(info.deg == 3);
  CHECK(info.lshrink == seg(ctx, "[r[1],r[2]]"));
  CHECK(info.minus == seg(ctx, "[r[0],r[1]]"));
  CHECK(info.lextend == seg(ctx, "[r[-1],r[2]]"));
  CHECK(info.plus == seg(ctx, "[r[0],r[3]]"));
  CHECK(info.shift_left == seg(ctx, "[r[-1],r[1]]"));
  CHECK(info.shift_right == seg(ctx, "[r[1],r[3]]"));
  CHECK_FALSE(seg_basic(ctx, seg(ctx, "[r[0],r[0]]")).lshrink);
  CHECK_THROWS_AS(Segment::make(0, 2, 0), Error);
}

TEST_CASE("segment exponents and tilde") {
  const auto ctx = CuspContext::self_dual_line();
  CHECK(expo_seg(ctx, seg(ctx, "[r[0],r[2]]")) == Rational(1));
  CHECK(expo_seg(ctx, seg(ctx, "[r[-1],r[0]]")) == Rational(-1, 2));
  CHECK(expo_seg(ctx, seg(ctx, "[r[-2],r[2]]")) == Rational(0));
  CHECK(tilde_seg(ctx, seg(ctx, "[r[0],r[2]]")) == seg(ctx, "[r[-2],r[0]]"));
  CHECK(tilde_seg(ctx, seg(ctx, "[r[-2],r[2]]")) == seg(ctx, "[r[-2],r[2]]"));
  const auto pq = paired_context();
  CHECK(tilde_seg(pq, seg(pq, "[p[0],p[1]]")) == seg(pq, "[q[-1],q[0]]"));
}

TEST_CASE("precedence examples") {
  const auto ctx = CuspContext::self_dual_line();
  CHECK(precedes(seg(ctx, "[r[-1],r[0]]"), seg(ctx, "[r[0],r[2]]")));
  CHECK_FALSE(precedes(seg(ctx, "[r[0],r[2]]"), seg(ctx, "[r[-1],r[0]]")));
  CHECK_FALSE(precedes(seg(ctx, "[r[0],r[1]]"), seg(ctx, "[r[0],r[2]]")));
  CHECK_FALSE(linked(seg(ctx, "[r[0],r[2]]"), seg(ctx, "[r[0],r[1]]")));
  CHECK(seg_union(seg(ctx, "[r[-1],r[0]]"), seg(ctx, "[r[0],r[2]]")) == seg(ctx, "[r[-1],r[2]]"));
  CHECK(seg_intersection(seg(ctx, "[r[-1],r[0]]"), seg(ctx, "[r[0],r[2]]")) == seg(ctx, "[r[0],r[0]]"));
  CHECK_FALSE(seg_intersection(seg(ctx, "[r[-3],r[-1]]"), seg(ctx, "[r[0],r[2]]")));
}

TEST_CASE("linkage agrees with the point-set description") {
  std::vector<Segment> all;
  for (int b = -4; b <= 4; ++b) {
    for (int e = b; e <= 4; ++e) all.push_back({0, b, e});
  }
  for (const auto& a : all) {
    for (const auto& b : all) {
      CAPTURE(a.b);
      CAPTURE(a.e);
      CAPTURE(b.b);
      CAPTURE(b.e);
      CHECK(linked(a, b) == linked_by_sets(a, b));
      CHECK(precedes(a, b) == (linked_by_sets(a, b) && a.b < b.b));
    }
  }
}

TEST_CASE("segments on different lines never link") {
  const auto pq = paired_context();
  CHECK_FALSE(linked(seg(pq, "[p[0],p[1]]"), seg(pq, "[q[1],q[2]]")));
  CHECK_THROWS_AS(seg_union(seg(pq, "[p[0],p[1]]"), seg(pq, "[q[1],q[2]]")), Error);
  CHECK_THROWS_AS(seg_union(seg(pq, "[p[0],p[1]]"), seg(pq, "[p[3],p[4]]")), Error);
}

#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "segcalc/segment.hpp"

namespace segcalc {

using SegmentList = boost::container::small_vector<Segment, 3>;

// Finite multiset of segments, stored sorted by (line, b, e).
class Multisegment {
 public:
  Multisegment() = default;
  Multisegment(std::initializer_list<Segment> segs);
  explicit Multisegment(const std::vector<Segment>& segs);
  explicit Multisegment(SegmentList segs);

  const SegmentList& segments() const { return segs_; }
  auto begin() const { return segs_.begin(); }
  auto end() const { return segs_.end(); }
  bool empty() const { return segs_.empty(); }
  std::size_t size() const { return segs_.size(); }

  void add(const Segment& s);
  void add(const Multisegment& other);
  // Removes one copy; returns false when `s` is absent.
  bool remove(const Segment& s);

  // Number of cuspidal points counted with multiplicity.
  int point_count() const;
  int degree(const CuspContext& ctx) const;
  // Cuspidal support as a sorted multiset of points.
  std::vector<CuspPoint> support_multiset() const;
  // Distinct points of the support.
  std::vector<CuspPoint> support() const;
  bool on_single_line() const;

  friend Multisegment operator+(Multisegment a, const Multisegment& b) {
    a.add(b);
    return a;
  }

  friend bool operator==(const Multisegment& a, const Multisegment& b) { return a.segs_ == b.segs_; }
  friend std::strong_ordering operator<=>(const Multisegment& a, const Multisegment& b) {
    return std::lexicographical_compare_three_way(a.segs_.begin(), a.segs_.end(), b.segs_.begin(), b.segs_.end());
  }

 private:
  SegmentList segs_;
};

struct SignSplit {
  Multisegment pos;
  Multisegment zero;
  Multisegment neg;
};

SignSplit split_by_sign(const CuspContext& ctx, const Multisegment& m);
Multisegment positive_part(const CuspContext& ctx, const Multisegment& m);

Segment pstv(const CuspContext& ctx, const Segment& s);
Multisegment pstv_multi(const CuspContext& ctx, const Multisegment& m);
Multisegment tilde_multi(const CuspContext& ctx, const Multisegment& m);

// One line with strictly decreasing b's and e's once sorted by b.
bool is_ladder(const Multisegment& m);
// Segments of a ladder ordered by decreasing b.
std::vector<Segment> ladder_order(const Multisegment& m);

struct LineFactor {
  std::vector<LineId> orbit;  // {line} or {line, partner}, ascending
  Multisegment part;
};

std::vector<LineFactor> line_factorization(const CuspContext& ctx, const Multisegment& m);

// m1 reachable from m2 by replacing linked pairs with union + intersection.
// Throws ExplicitlyTooLarge beyond kZelevinskyMaxPoints points.
inline constexpr int kZelevinskyMaxPoints = 12;
bool zelevinsky_leq(const Multisegment& m1, const Multisegment& m2);

// Sum of the singletons of s.
Multisegment seg_to_L(const Segment& s);

}  // namespace segcalc

#include "segcalc/multisegment.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "segcalc/error.hpp"

namespace segcalc {

Multisegment::Multisegment(std::initializer_list<Segment> segs) : segs_(segs) {
  std::sort(segs_.begin(), segs_.end());
}

Multisegment::Multisegment(const std::vector<Segment>& segs) : segs_(segs.begin(), segs.end()) {
  std::sort(segs_.begin(), segs_.end());
}

Multisegment::Multisegment(SegmentList segs) : segs_(std::move(segs)) {
  std::sort(segs_.begin(), segs_.end());
}

void Multisegment::add(const Segment& s) {
  segs_.insert(std::upper_bound(segs_.begin(), segs_.end(), s), s);
}

void Multisegment::add(const Multisegment& other) {
  const auto mid = segs_.insert(segs_.end(), other.segs_.begin(), other.segs_.end());
  std::inplace_merge(segs_.begin(), mid, segs_.end());
}

bool Multisegment::remove(const Segment& s) {
  auto it = std::lower_bound(segs_.begin(), segs_.end(), s);
  if (it == segs_.end() || *it != s) return false;
  segs_.erase(it);
  return true;
}

int Multisegment::point_count() const {
  int n = 0;
  for (const auto& s : segs_) n += s.length();
  return n;
}

int Multisegment::degree(const CuspContext& ctx) const {
  int d = 0;
  for (const auto& s : segs_) d += s.length() * ctx.deg(s.line);
  return d;
}

std::vector<CuspPoint> Multisegment::support_multiset() const {
  std::vector<CuspPoint> pts;
  for (const auto& s : segs_) {
    for (int i = s.b; i <= s.e; ++i) pts.push_back({s.line, i});
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<CuspPoint> Multisegment::support() const {
  auto pts = support_multiset();
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

bool Multisegment::on_single_line() const {
  return segs_.empty() || segs_.front().line == segs_.back().line;
}

SignSplit split_by_sign(const CuspContext& ctx, const Multisegment& m) {
  SignSplit out;
  for (const auto& s : m) {
    const Rational x = expo_seg(ctx, s);
    if (x > 0) {
      out.pos.add(s);
    } else if (x < 0) {
      out.neg.add(s);
    } else {
      out.zero.add(s);
    }
  }
  return out;
}

Multisegment positive_part(const CuspContext& ctx, const Multisegment& m) {
  return split_by_sign(ctx, m).pos;
}

Segment pstv(const CuspContext& ctx, const Segment& s) {
  return expo_seg(ctx, s) >= 0 ? s : tilde_seg(ctx, s);
}

Multisegment pstv_multi(const CuspContext& ctx, const Multisegment& m) {
  std::vector<Segment> out;
  out.reserve(m.size());
  for (const auto& s : m) out.push_back(pstv(ctx, s));
  return Multisegment(std::move(out));
}

Multisegment tilde_multi(const CuspContext& ctx, const Multisegment& m) {
  std::vector<Segment> out;
  out.reserve(m.size());
  for (const auto& s : m) out.push_back(tilde_seg(ctx, s));
  return Multisegment(std::move(out));
}

bool is_ladder(const Multisegment& m) {
  if (!m.on_single_line()) return false;
  // Canonical order is by increasing b, so strictness must hold forwards.
  const auto& s = m.segments();
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i].b <= s[i - 1].b || s[i].e <= s[i - 1].e) return false;
  }
  return true;
}

std::vector<Segment> ladder_order(const Multisegment& m) {
  return {m.segments().rbegin(), m.segments().rend()};
}

std::vector<LineFactor> line_factorization(const CuspContext& ctx, const Multisegment& m) {
  std::map<std::vector<LineId>, Multisegment> parts;
  for (const auto& s : m) {
    const LineId other = ctx.tilde_line(s.line);
    std::vector<LineId> key{s.line};
    if (other != s.line) key = {std::min(s.line, other), std::max(s.line, other)};
    parts[key].add(s);
  }
  std::vector<LineFactor> out;
  for (auto& [key, part] : parts) out.push_back({key, std::move(part)});
  return out;
}

bool zelevinsky_leq(const Multisegment& m1, const Multisegment& m2) {
  if (m1.support_multiset() != m2.support_multiset()) return false;
  if (m1.point_count() > kZelevinskyMaxPoints) {
    throw Error(ErrorCode::ExplicitlyTooLarge,
                "order closure limited to " + std::to_string(kZelevinskyMaxPoints) + " points");
  }
  std::set<Multisegment> seen{m2};
  std::deque<Multisegment> queue{m2};
  while (!queue.empty()) {
    const Multisegment cur = std::move(queue.front());
    queue.pop_front();
    if (cur == m1) return true;
    const auto& segs = cur.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
      for (std::size_t j = i + 1; j < segs.size(); ++j) {
        if (!linked(segs[i], segs[j])) continue;
        Multisegment next = cur;
        next.remove(segs[i]);
        next.remove(segs[j]);
        next.add(seg_union(segs[i], segs[j]));
        if (auto meet = seg_intersection(segs[i], segs[j])) next.add(*meet);
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return false;
}

Multisegment seg_to_L(const Segment& s) {
  std::vector<Segment> out;
  for (int i = s.b; i <= s.e; ++i) out.push_back({s.line, i, i});
  return Multisegment(std::move(out));
}

}  // namespace segcalc

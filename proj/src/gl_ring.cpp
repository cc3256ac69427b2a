#include "segcalc/gl_ring.hpp"

#include <algorithm>

#include "segcalc/error.hpp"

namespace segcalc {
namespace {

// Calls visit(x) for every strictly decreasing x with x[i] in [lo[i], hi[i]].
template <class Visit>
void for_each_decreasing(const std::vector<int>& lo, const std::vector<int>& hi, Visit&& visit) {
  const std::size_t n = lo.size();
  std::vector<int> x(n);
  auto top = [&](std::size_t i) { return i > 0 ? std::min(hi[i], x[i - 1] - 1) : hi[i]; };
  // Odometer over the ragged box; position i is valid once x[i] <= top(i).
  std::size_t i = 0;
  if (n == 0) {
    visit(x);
    return;
  }
  x[0] = lo[0];
  while (true) {
    if (x[i] > top(i)) {
      if (i == 0) return;
      ++x[--i];
      continue;
    }
    if (i + 1 == n) {
      visit(x);
      ++x[i];
    } else {
      x[i + 1] = lo[i + 1];
      ++i;
    }
  }
}

// Z of the sum of the intervals [from[i] + shift, to[i]] on `line`, skipping
// empty ones. Both bounds decrease with i, so the sum is a ladder.
Word ladder_piece(LineId line, const std::vector<int>& from, int shift, const std::vector<int>& to) {
  SegmentList segs;
  for (std::size_t i = from.size(); i-- > 0;) {
    if (from[i] + shift <= to[i]) segs.push_back({line, from[i] + shift, to[i]});
  }
  if (segs.empty()) return Word::unit();
  const LabelKind kind = segs.size() == 1 ? LabelKind::Segment : LabelKind::Ladder;
  return Word::of({Multisegment(std::move(segs)), kind});
}

// tilde of ladder_piece(line, from, shift, to).
Word tilde_ladder_piece(const CuspContext& ctx, LineId line, const std::vector<int>& from, int shift,
                        const std::vector<int>& to) {
  SegmentList segs;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (from[i] + shift <= to[i]) segs.push_back(tilde_seg(ctx, {line, from[i] + shift, to[i]}));
  }
  if (segs.empty()) return Word::unit();
  const LabelKind kind = segs.size() == 1 ? LabelKind::Segment : LabelKind::Ladder;
  return Word::of({Multisegment(std::move(segs)), kind});
}

struct LadderBounds {
  LineId line = 0;
  std::vector<int> b;  // decreasing
  std::vector<int> e;
  std::vector<int> lo;  // b - 1
};

LadderBounds bounds_of(const Multisegment& ladder) {
  LadderBounds out;
  if (ladder.empty()) return out;
  out.line = ladder.segments().front().line;
  for (const auto& s : ladder_order(ladder)) {
    out.b.push_back(s.b);
    out.e.push_back(s.e);
    out.lo.push_back(s.b - 1);
  }
  return out;
}

void require_ladder(const Multisegment& m) {
  if (!is_ladder(m)) throw Error(ErrorCode::UnsupportedLabel, "input is not a ladder");
}

Coeff binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Coeff r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

IrrLabel make_z_label(Multisegment m) {
  if (m.empty()) throw Error(ErrorCode::UnsupportedLabel, "Z of the empty multisegment is the unit, not a label");
  LabelKind kind = LabelKind::Opaque;
  if (m.size() == 1) {
    kind = LabelKind::Segment;
  } else if (is_ladder(m)) {
    kind = LabelKind::Ladder;
  }
  return {std::move(m), kind};
}

Word::Word(LabelList factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

Word Word::z(const Multisegment& m) {
  if (m.empty()) return unit();
  return of(make_z_label(m));
}

int Word::point_count() const {
  int n = 0;
  for (const auto& l : factors_) n += l.m.point_count();
  return n;
}

int Word::degree(const CuspContext& ctx) const {
  int d = 0;
  for (const auto& l : factors_) d += l.m.degree(ctx);
  return d;
}

Word operator*(const Word& a, const Word& b) {
  Word out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
             std::back_inserter(out.factors_));
  return out;
}

GrElement operator*(const GrElement& a, const GrElement& b) {
  std::vector<GrElement::Term> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) raw.push_back({wa * wb, ca * cb});
  }
  return GrElement(std::move(raw));
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  std::vector<TensorElement::Term> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) raw.push_back({{ka.first * kb.first, ka.second * kb.second}, ca * cb});
  }
  return TensorElement(std::move(raw));
}

Word tilde_word(const CuspContext& ctx, const Word& w) {
  LabelList out;
  out.reserve(w.factors().size());
  for (const auto& l : w.factors()) out.push_back({tilde_multi(ctx, l.m), l.kind});
  return Word(std::move(out));
}

TensorElement comult_label(const CuspContext&, const IrrLabel& label) {
  if (label.kind == LabelKind::Opaque) {
    throw Error(ErrorCode::UnsupportedLabel, "no comultiplication formula for a non-ladder label");
  }
  const auto lb = bounds_of(label.m);
  std::vector<TensorElement::Term> raw;
  for_each_decreasing(lb.lo, lb.e, [&](const std::vector<int>& x) {
    raw.push_back({{ladder_piece(lb.line, lb.b, 0, x), ladder_piece(lb.line, x, 1, lb.e)}, 1});
  });
  return TensorElement(std::move(raw));
}

TensorElement comult(const CuspContext& ctx, const Word& w) {
  if (w.factors().size() == 1) return comult_label(ctx, w.factors().front());
  TensorElement out{{{Word::unit(), Word::unit()}, 1}};
  for (const auto& l : w.factors()) out = out * comult_label(ctx, l);
  return out;
}

TensorElement comult(const CuspContext& ctx, const GrElement& g) {
  if (g.size() == 1 && g.begin()->second == 1) return comult(ctx, g.begin()->first);
  std::vector<TensorElement::Term> raw;
  for (const auto& [w, c] : g) {
    for (const auto& [k, d] : comult(ctx, w)) raw.push_back({k, c * d});
  }
  return TensorElement(std::move(raw));
}

TripleElement comult2(const CuspContext& ctx, const GrElement& g) {
  std::vector<TripleElement::Term> raw;
  for (const auto& [k, c] : comult(ctx, g)) {
    auto inner = comult(ctx, k.first);
    for (auto& [k2, d] : std::move(inner).release()) {
      raw.push_back({{std::move(k2.first), std::move(k2.second), k.second}, c * d});
    }
  }
  return TripleElement(std::move(raw));
}

TripleElement comult2_right(const CuspContext& ctx, const GrElement& g) {
  std::vector<TripleElement::Term> raw;
  for (const auto& [k, c] : comult(ctx, g)) {
    for (const auto& [k2, d] : comult(ctx, k.second)) raw.push_back({{k.first, k2.first, k2.second}, c * d});
  }
  return TripleElement(std::move(raw));
}

TensorElement comod(const CuspContext& ctx, const GrElement& g) {
  std::vector<TensorElement::Term> raw;
  for (auto& [k, c] : comult2(ctx, g).release()) {
    auto& [alpha, beta, gamma] = k;
    raw.push_back({{alpha * tilde_word(ctx, gamma), std::move(beta)}, c});
  }
  return TensorElement(std::move(raw));
}

GrElement comodmax(const CuspContext& ctx, const GrElement& g) {
  std::vector<GrElement::Term> raw;
  for (const auto& [k, c] : comult(ctx, g)) raw.push_back({k.first * tilde_word(ctx, k.second), c});
  return GrElement(std::move(raw));
}

std::vector<TensorKey> comod_terms_via_comult2(const CuspContext& ctx, const Multisegment& ladder) {
  require_ladder(ladder);
  std::vector<TensorKey> out;
  for (auto& [k, c] : comult2(ctx, gr_z(ladder)).release()) {
    auto& [alpha, beta, gamma] = k;
    Word left = alpha * tilde_word(ctx, gamma);
    for (Coeff i = 1; i < c; ++i) out.push_back({left, beta});
    out.push_back({std::move(left), std::move(beta)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TensorKey> comod_terms_closed_form(const CuspContext& ctx, const Multisegment& ladder) {
  require_ladder(ladder);
  const auto lb = bounds_of(ladder);
  std::vector<TensorKey> out;
  for_each_decreasing(lb.lo, lb.e, [&](const std::vector<int>& x) {
    const Word left = ladder_piece(lb.line, lb.b, 0, x);
    for_each_decreasing(x, lb.e, [&](const std::vector<int>& y) {
      const Word right = tilde_ladder_piece(ctx, lb.line, y, 1, lb.e);
      out.push_back({left * right, ladder_piece(lb.line, x, 1, y)});
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> comodmax_terms_closed_form(const CuspContext& ctx, const Multisegment& ladder) {
  require_ladder(ladder);
  const auto lb = bounds_of(ladder);
  std::vector<Word> out;
  for_each_decreasing(lb.lo, lb.e, [&](const std::vector<int>& x) {
    out.push_back(ladder_piece(lb.line, lb.b, 0, x) * tilde_ladder_piece(ctx, lb.line, x, 1, lb.e));
  });
  std::sort(out.begin(), out.end());
  return out;
}

Coeff jacmin_length(const CuspContext& ctx, const GrElement& g) {
  std::optional<LineId> line;
  for (const auto& [w, c] : g) {
    for (const auto& l : w.factors()) {
      if (l.kind == LabelKind::Opaque) {
        throw Error(ErrorCode::UnsupportedLabel, "minimal Jacquet length needs ladder labels");
      }
      for (const auto& s : l.m) {
        if (line && *line != s.line) throw Error(ErrorCode::MixedLines, "labels lie on more than one line");
        line = s.line;
      }
    }
  }

  // Number of ways to peel a label one cuspidal point at a time from the left.
  std::map<IrrLabel, Coeff> memo;
  std::function<Coeff(const IrrLabel&)> peel = [&](const IrrLabel& label) -> Coeff {
    if (auto it = memo.find(label); it != memo.end()) return it->second;
    Coeff total = 0;
    for (const auto& [k, c] : comult_label(ctx, label)) {
      if (k.first.point_count() != 1) continue;
      const auto& rest = k.second.factors();
      total += c * (rest.empty() ? 1 : peel(rest.front()));
    }
    memo.emplace(label, total);
    return total;
  };

  Coeff sum = 0;
  for (const auto& [w, c] : g) {
    Coeff term = 1;
    int placed = 0;
    for (const auto& l : w.factors()) {
      const int n = l.m.point_count();
      placed += n;
      term *= binomial(placed, n) * peel(l);
    }
    sum += c * term;
  }
  return sum;
}

ExactSequence two_seg_exact_sequence(const CuspContext&, const Segment& small, const Segment& big) {
  if (!precedes(small, big)) {
    throw Error(ErrorCode::NotLinked, "the first segment must precede the second");
  }
  ExactSequence out;
  out.sub.add(seg_union(small, big));
  if (auto meet = seg_intersection(small, big)) out.sub.add(*meet);
  out.quot = Multisegment{small, big};
  return out;
}

}  // namespace segcalc

#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "segcalc/multisegment.hpp"

namespace segcalc {

enum class LabelKind { Segment, Ladder, Opaque };

// The irreducible Z(m) for a nonempty m. Comultiplication formulas exist only
// for the Segment and Ladder kinds.
struct IrrLabel {
  Multisegment m;
  LabelKind kind = LabelKind::Opaque;

  auto operator<=>(const IrrLabel&) const = default;
};

// Picks the most specific kind for a nonempty m.
IrrLabel make_z_label(Multisegment m);

using LabelList = std::vector<IrrLabel>;

// Commutative product of labels; the empty word is the unit.
class Word {
 public:
  Word() = default;
  explicit Word(LabelList factors);

  static Word unit() { return {}; }
  static Word of(IrrLabel label) {
    Word w;
    w.factors_.push_back(std::move(label));
    return w;
  }
  // Z(m), or the unit when m is empty.
  static Word z(const Multisegment& m);

  const LabelList& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  int point_count() const;
  int degree(const CuspContext& ctx) const;

  friend Word operator*(const Word& a, const Word& b);

  friend bool operator==(const Word& a, const Word& b) { return a.factors_ == b.factors_; }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                                                  b.factors_.end());
  }

 private:
  LabelList factors_;
};

using Coeff = std::int64_t;

// Finite Z-linear combination kept as a sorted vector of (key, coeff) with
// no zero coefficients.
template <class Key>
class LinearCombination {
 public:
  using Term = std::pair<Key, Coeff>;

  LinearCombination() = default;
  LinearCombination(std::initializer_list<Term> init) : LinearCombination(std::vector<Term>(init)) {}
  // Sorts and merges arbitrary (possibly repeated) terms.
  explicit LinearCombination(std::vector<Term> raw) : terms_(std::move(raw)) { normalize(); }

  void add(const Key& key, Coeff c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, const Key& k) { return t.first < k; });
    if (it != terms_.end() && it->first == key) {
      if ((it->second += c) == 0) terms_.erase(it);
    } else {
      terms_.insert(it, {key, c});
    }
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    std::vector<Term> all = std::move(terms_);
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    terms_ = std::move(all);
    normalize();
    return *this;
  }

  Coeff coeff(const Key& key) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, const Key& k) { return t.first < k; });
    return it != terms_.end() && it->first == key ? it->second : 0;
  }

  const std::vector<Term>& terms() const { return terms_; }
  // Hands over the sorted terms, leaving this combination empty.
  std::vector<Term> release() && { return std::move(terms_); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  bool operator==(const LinearCombination&) const = default;

 private:
  // Sorts through an index permutation so each key is moved once.
  void normalize() {
    std::vector<std::uint32_t> order(terms_.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return terms_[a].first < terms_[b].first; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (std::size_t i = 0; i < order.size();) {
      Term& head = terms_[order[i]];
      Coeff c = 0;
      std::size_t j = i;
      for (; j < order.size() && !(head.first < terms_[order[j]].first); ++j) c += terms_[order[j]].second;
      if (c != 0) merged.push_back({std::move(head.first), c});
      i = j;
    }
    terms_ = std::move(merged);
  }

  std::vector<Term> terms_;
};

using GrElement = LinearCombination<Word>;
using TensorKey = std::pair<Word, Word>;
using TensorElement = LinearCombination<TensorKey>;
using TripleKey = std::tuple<Word, Word, Word>;
using TripleElement = LinearCombination<TripleKey>;

inline GrElement gr(const Word& w, Coeff c = 1) {
  GrElement g;
  g.add(w, c);
  return g;
}
inline GrElement gr_z(const Multisegment& m) { return gr(Word::z(m)); }

GrElement operator*(const GrElement& a, const GrElement& b);
// (a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2
TensorElement operator*(const TensorElement& a, const TensorElement& b);

Word tilde_word(const CuspContext& ctx, const Word& w);

// Throws UnsupportedLabel for Opaque labels.
TensorElement comult_label(const CuspContext& ctx, const IrrLabel& label);
TensorElement comult(const CuspContext& ctx, const Word& w);
TensorElement comult(const CuspContext& ctx, const GrElement& g);
// (comult (x) id) o comult
TripleElement comult2(const CuspContext& ctx, const GrElement& g);
// (id (x) comult) o comult
TripleElement comult2_right(const CuspContext& ctx, const GrElement& g);

// alpha x tilde(gamma) (x) beta over the terms of comult2.
TensorElement comod(const CuspContext& ctx, const GrElement& g);
// alpha x tilde(beta) over the terms of comult.
GrElement comodmax(const CuspContext& ctx, const GrElement& g);

// Unmerged comod terms of Z(m) for a ladder m, obtained two ways: by twisting
// the comult2 expansion, and from the direct ladder sum. Sorted.
std::vector<TensorKey> comod_terms_via_comult2(const CuspContext& ctx, const Multisegment& ladder);
std::vector<TensorKey> comod_terms_closed_form(const CuspContext& ctx, const Multisegment& ladder);
std::vector<Word> comodmax_terms_closed_form(const CuspContext& ctx, const Multisegment& ladder);

// Length of the minimal Jacquet module. All labels must lie on one line.
Coeff jacmin_length(const CuspContext& ctx, const GrElement& g);

struct ExactSequence {
  Multisegment sub;
  Multisegment quot;
};

// Requires precedes(small, big); throws NotLinked otherwise.
ExactSequence two_seg_exact_sequence(const CuspContext& ctx, const Segment& small, const Segment& big);

}  // namespace segcalc

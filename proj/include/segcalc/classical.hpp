#pragma once

#include <compare>
#include <utility>

#include "segcalc/gl_ring.hpp"

namespace segcalc {

bool cuspred_query(const SigmaContext& sigma, CuspPoint rho);

// The classical-group factor of a tensor term: `induced` ⋊ sigma, where the
// unit word stands for sigma itself. Since Z(l) ⋊ sigma and Z(tilde l) ⋊ sigma
// have the same composition factors, each factor of `induced` is stored as
// the smaller of l and tilde l; build labels with classical_label().
struct ClassicalLabel {
  Word induced;

  bool is_sigma() const { return induced.is_unit(); }
  auto operator<=>(const ClassicalLabel&) const = default;
};

ClassicalLabel classical_label(const CuspContext& ctx, const Word& induced);

using GTensorKey = std::pair<Word, ClassicalLabel>;
using GTensorElement = LinearCombination<GTensorKey>;

// Jacquet restriction of g ⋊ sigma for supercuspidal sigma.
GTensorElement mu_star(const CuspContext& ctx, const SigmaContext& sigma, const GrElement& g);

// (a (x) b) ⋊ (c (x) d ⋊ sigma) = a c (x) (b d ⋊ sigma)
GTensorElement act(const CuspContext& ctx, const TensorElement& gl, const GTensorElement& classical);

// 2^N times the GL minimal Jacquet length, N the total point count.
Coeff jacmin_length_classical(const CuspContext& ctx, const SigmaContext& sigma, const GrElement& g);

}  // namespace segcalc

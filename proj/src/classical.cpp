#include "segcalc/classical.hpp"

#include "segcalc/error.hpp"

namespace segcalc {

bool cuspred_query(const SigmaContext& sigma, CuspPoint rho) { return sigma.cuspred.contains(rho); }

ClassicalLabel classical_label(const CuspContext& ctx, const Word& induced) {
  LabelList factors;
  factors.reserve(induced.factors().size());
  for (const auto& l : induced.factors()) {
    IrrLabel t{tilde_multi(ctx, l.m), l.kind};
    factors.push_back(std::min(l, t));
  }
  return {Word(std::move(factors))};
}

GTensorElement mu_star(const CuspContext& ctx, const SigmaContext&, const GrElement& g) {
  std::vector<GTensorElement::Term> raw;
  for (const auto& [k, c] : comod(ctx, g)) raw.push_back({{k.first, classical_label(ctx, k.second)}, c});
  return GTensorElement(std::move(raw));
}

GTensorElement act(const CuspContext& ctx, const TensorElement& gl, const GTensorElement& classical) {
  std::vector<GTensorElement::Term> raw;
  for (const auto& [ka, ca] : gl) {
    for (const auto& [kb, cb] : classical) {
      raw.push_back({{ka.first * kb.first, classical_label(ctx, ka.second * kb.second.induced)}, ca * cb});
    }
  }
  return GTensorElement(std::move(raw));
}

Coeff jacmin_length_classical(const CuspContext& ctx, const SigmaContext&, const GrElement& g) {
  Coeff total = 0;
  for (const auto& [w, c] : g) {
    const int n = w.point_count();
    if (n >= 62) throw Error(ErrorCode::ExplicitlyTooLarge, "2^N overflows");
    total += c * (Coeff{1} << n) * jacmin_length(ctx, gr(w));
  }
  return total;
}

}  // namespace segcalc

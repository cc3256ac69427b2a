#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "segcalc/config.hpp"
#include "segcalc/cusp.hpp"
#include "segcalc/format.hpp"
#include "segcalc/parse.hpp"

namespace segcalc::test {

// Line r, t0 = 0, cuspred given by one representative index (or none).
inline Config self_dual_config(std::vector<int> cuspred = {}, int t0 = 0, const std::string& line = "r") {
  CuspContext ctx = CuspContext::self_dual_line(line, t0);
  std::vector<CuspPoint> reps;
  for (int i : cuspred) reps.push_back({0, i});
  SigmaContext sigma = make_sigma(ctx, reps);
  return {std::move(ctx), std::move(sigma)};
}

// Self-dual r (t0 = 0) next to p, q paired with c = 0; p and q have deg 2.
inline CuspContext paired_context() {
  CuspLine r{"r", 1, SelfDual{0}, Rational(0)};
  CuspLine p{"p", 2, Paired{"q", 0}, Rational(0)};
  CuspLine q{"q", 2, Paired{"p", 0}, Rational(0)};
  return CuspContext({r, p, q});
}

inline Multisegment ms(const CuspContext& ctx, const std::string& text) { return parse_multisegment(ctx, text); }
inline Segment seg(const CuspContext& ctx, const std::string& text) { return parse_segment(ctx, text); }
inline CuspPoint pt(const CuspContext& ctx, const std::string& text) { return parse_point(ctx, text); }

}  // namespace segcalc::test

#include "segcalc/enumerate.hpp"

namespace segcalc {

std::vector<Segment> window_segments(LineId line, Window window) {
  std::vector<Segment> out;
  for (int b = window.lo; b <= window.hi; ++b) {
    for (int e = b; e <= window.hi; ++e) out.push_back({line, b, e});
  }
  return out;
}

void for_each_multisegment(const CuspContext& ctx, LineId line, Window window, int max_degree,
                           const std::function<void(const Multisegment&)>& visit) {
  const auto segs = window_segments(line, window);
  const int deg = ctx.deg(line);
  std::vector<Segment> chosen;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int budget) {
    visit(Multisegment(chosen));
    for (std::size_t k = from; k < segs.size(); ++k) {
      const int cost = segs[k].length() * deg;
      if (cost > budget) continue;
      chosen.push_back(segs[k]);
      rec(k, budget - cost);
      chosen.pop_back();
    }
  };
  rec(0, max_degree);
}

std::vector<Multisegment> enumerate_multisegments(const CuspContext& ctx, LineId line, Window window,
                                                  int max_degree) {
  std::vector<Multisegment> out;
  for_each_multisegment(ctx, line, window, max_degree, [&](const Multisegment& m) { out.push_back(m); });
  return out;
}

std::vector<Multisegment> enumerate_ladders(LineId line, Window window, int max_segments) {
  const auto segs = window_segments(line, window);
  std::vector<Multisegment> out;
  std::vector<Segment> chosen;
  // Canonical order has increasing b, so a ladder grows by strictly larger b and e.
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    out.emplace_back(chosen);
    if (static_cast<int>(chosen.size()) == max_segments) return;
    for (std::size_t k = from; k < segs.size(); ++k) {
      if (!chosen.empty() && (segs[k].b <= chosen.back().b || segs[k].e <= chosen.back().e)) continue;
      chosen.push_back(segs[k]);
      rec(k + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace segcalc

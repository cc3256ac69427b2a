#include "segcalc/format.hpp"

namespace segcalc {
namespace {

template <class Range, class Fn>
std::string join(const Range& items, std::string_view sep, Fn&& fn) {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += sep;
    out += fn(item);
    first = false;
  }
  return out;
}

}  // namespace

std::string to_string(const CuspContext& ctx, CuspPoint p) {
  return ctx.name(p.line) + "[" + std::to_string(p.index) + "]";
}

std::string to_string(const CuspContext& ctx, const Segment& s) {
  return "[" + to_string(ctx, s.begin_point()) + "," + to_string(ctx, s.end_point()) + "]";
}

std::string to_string(const CuspContext& ctx, const Multisegment& m) {
  if (m.empty()) return "0";
  return join(m, " + ", [&](const Segment& s) { return to_string(ctx, s); });
}

std::string to_string(const CuspContext& ctx, const IrrLabel& l) { return "Z(" + to_string(ctx, l.m) + ")"; }

std::string to_string(const CuspContext& ctx, const Word& w) {
  if (w.is_unit()) return "1";
  return join(w.factors(), " x ", [&](const IrrLabel& l) { return to_string(ctx, l); });
}

std::string to_string(const CuspContext& ctx, const PointSet& s) {
  return "{" + join(s, ", ", [&](CuspPoint p) { return to_string(ctx, p); }) + "}";
}

std::string to_string(const CuspContext& ctx, const SigmaContext& sigma, const ClassicalLabel& l) {
  if (l.is_sigma()) return sigma.name;
  return to_string(ctx, l.induced) + " ⋊ " + sigma.name;
}

}  // namespace segcalc

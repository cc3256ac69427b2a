#include "segcalc/derivative.hpp"

#include <algorithm>
#include <functional>

#include "segcalc/error.hpp"

namespace segcalc {
namespace {

// Kuhn's augmenting paths; true when every left vertex is matched.
bool saturates_left(std::size_t n_left, std::size_t n_right,
                    const std::function<bool(std::size_t, std::size_t)>& edge) {
  std::vector<int> match_right(n_right, -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (std::size_t v = 0; v < n_right; ++v) {
      if (seen[v] || !edge(u, v)) continue;
      seen[v] = 1;
      if (match_right[v] < 0 || augment(static_cast<std::size_t>(match_right[v]))) {
        match_right[v] = static_cast<int>(u);
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < n_left; ++u) {
    seen.assign(n_right, 0);
    if (!augment(u)) return false;
  }
  return true;
}

std::vector<Segment> beginning_at(const Multisegment& m, CuspPoint p) {
  std::vector<Segment> out;
  for (const auto& s : m) {
    if (s.begin_point() == p) out.push_back(s);
  }
  return out;
}

std::vector<Segment> ending_at(const Multisegment& m, CuspPoint p) {
  std::vector<Segment> out;
  for (const auto& s : m) {
    if (s.end_point() == p) out.push_back(s);
  }
  return out;
}

bool left_reduced_at(const Multisegment& m, CuspPoint rho) {
  const auto from = beginning_at(m, rho);
  if (from.empty()) return true;
  const auto to = beginning_at(m, rho.shifted(1));
  return saturates_left(from.size(), to.size(),
                        [&](std::size_t i, std::size_t j) { return precedes(from[i], to[j]); });
}

bool right_reduced_at(const Multisegment& m, CuspPoint rho) {
  const auto from = ending_at(m, rho);
  if (from.empty()) return true;
  const auto to = ending_at(m, rho.shifted(-1));
  return saturates_left(from.size(), to.size(),
                        [&](std::size_t i, std::size_t j) { return precedes(to[j], from[i]); });
}

void replace(Multisegment& m, const Segment& old, const std::optional<Segment>& with) {
  m.remove(old);
  if (with) m.add(*with);
}

bool within_cuspred(const SigmaContext& sigma, const PointSet& pts) {
  return std::all_of(pts.begin(), pts.end(), [&](const CuspPoint& p) { return sigma.cuspred.contains(p); });
}

Multisegment repeat(const Multisegment& unit, int k) {
  Multisegment out;
  for (int i = 0; i < k; ++i) out.add(unit);
  return out;
}

}  // namespace

PointSet lnrset(const CuspContext&, const Multisegment& m) {
  PointSet out;
  for (const auto& s : m) {
    if (!left_reduced_at(m, s.begin_point())) out.insert(s.begin_point());
  }
  return out;
}

PointSet rnrset(const CuspContext&, const Multisegment& m) {
  PointSet out;
  for (const auto& s : m) {
    if (!right_reduced_at(m, s.end_point())) out.insert(s.end_point());
  }
  return out;
}

PointSet lnrset_ladder(const Multisegment& ladder) {
  PointSet begins;
  for (const auto& s : ladder) begins.insert(s.begin_point());
  PointSet out;
  for (const auto& p : begins) {
    if (!begins.contains(p.shifted(1))) out.insert(p);
  }
  return out;
}

Multisegment left_derivative(const CuspContext&, const Multisegment& m, CuspPoint rho) {
  auto from = beginning_at(m, rho);
  auto to = beginning_at(m, rho.shifted(1));
  std::sort(from.begin(), from.end(), [](const Segment& a, const Segment& b) { return a.e > b.e; });
  std::sort(to.begin(), to.end(), [](const Segment& a, const Segment& b) { return a.e < b.e; });
  std::vector<char> used(to.size(), 0);
  Multisegment out = m;
  for (const auto& s : from) {
    bool matched = false;
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (!used[j] && precedes(s, to[j])) {
        used[j] = 1;
        matched = true;
        break;
      }
    }
    if (!matched) replace(out, s, lshrink(s));
  }
  return out;
}

Multisegment right_derivative(const CuspContext&, const Multisegment& m, CuspPoint rho) {
  auto from = ending_at(m, rho);
  auto to = ending_at(m, rho.shifted(-1));
  std::sort(from.begin(), from.end(), [](const Segment& a, const Segment& b) { return a.b < b.b; });
  std::sort(to.begin(), to.end(), [](const Segment& a, const Segment& b) { return a.b > b.b; });
  std::vector<char> used(to.size(), 0);
  Multisegment out = m;
  for (const auto& s : from) {
    bool matched = false;
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (!used[j] && precedes(to[j], s)) {
        used[j] = 1;
        matched = true;
        break;
      }
    }
    if (!matched) replace(out, s, minus(s));
  }
  return out;
}

Multisegment left_derivative_set(const CuspContext& ctx, Multisegment m, const PointSet& points) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : points) {
      Multisegment next = left_derivative(ctx, m, p);
      if (next != m) {
        m = std::move(next);
        changed = true;
      }
    }
  }
  return m;
}

Multisegment right_derivative_set(const CuspContext& ctx, Multisegment m, const PointSet& points) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : points) {
      Multisegment next = right_derivative(ctx, m, p);
      if (next != m) {
        m = std::move(next);
        changed = true;
      }
    }
  }
  return m;
}

Multisegment derivative_DAB(const CuspContext& ctx, const Multisegment& m, const PointSet& left,
                            const PointSet& right) {
  Multisegment lr = right_derivative_set(ctx, left_derivative_set(ctx, m, left), right);
  Multisegment rl = left_derivative_set(ctx, right_derivative_set(ctx, m, right), left);
  if (lr != rl) {
    throw Error(ErrorCode::InvariantViolation, "left and right derivatives do not commute");
  }
  return lr;
}

std::vector<Multisegment> left_derivative_candidates(const CuspContext&, const Multisegment& m,
                                                     CuspPoint rho) {
  // Distinct segments beginning at rho with their multiplicities.
  std::vector<std::pair<Segment, int>> groups;
  for (const auto& s : beginning_at(m, rho)) {
    if (!groups.empty() && groups.back().first == s) {
      ++groups.back().second;
    } else {
      groups.push_back({s, 1});
    }
  }
  std::set<Multisegment> results;
  std::vector<int> take(groups.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == groups.size()) {
      Multisegment out = m;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        for (int c = 0; c < take[g]; ++c) replace(out, groups[g].first, lshrink(groups[g].first));
      }
      if (left_reduced_at(out, rho)) results.insert(std::move(out));
      return;
    }
    for (take[i] = 0; take[i] <= groups[i].second; ++take[i]) rec(i + 1);
  };
  rec(0);
  return {results.begin(), results.end()};
}

bool is_minimal(const CuspContext& ctx, const SigmaContext& sigma, const Multisegment& m) {
  return within_cuspred(sigma, lnrset(ctx, m)) && within_cuspred(sigma, rnrset(ctx, m));
}

bool is_critical(const CuspContext& ctx, const SigmaContext& sigma, const Multisegment& m) {
  if (m.empty() || !is_minimal(ctx, sigma, m)) return false;
  for (const auto& rho : sigma.cuspred) {
    const Multisegment d = derivative_DAB(ctx, m, {rho}, {tilde_point(ctx, rho)});
    if (d == m) continue;
    for (const auto& p : d.support()) {
      if (sigma.cuspred.contains(p)) return false;
    }
  }
  return true;
}

std::string_view pattern_name(CriticalPattern p) {
  switch (p) {
    case CriticalPattern::AlphaPowers: return "AlphaPowers";
    case CriticalPattern::ZPower: return "ZPower";
    case CriticalPattern::LPower: return "LPower";
    case CriticalPattern::SelfDualMixed: return "SelfDualMixed";
  }
  return "?";
}

Multisegment critical_instance(const CuspContext& ctx, const CriticalType& t) {
  const CuspPoint a = t.alpha;
  const CuspPoint at = tilde_point(ctx, a);
  switch (t.pattern) {
    case CriticalPattern::AlphaPowers:
      return repeat({Segment::point(a)}, t.k) + repeat({Segment::point(at)}, t.l);
    case CriticalPattern::ZPower:
      return repeat({Segment{a.line, at.index, a.index}}, t.k);
    case CriticalPattern::LPower:
      return repeat(seg_to_L({a.line, at.index, a.index}), t.k);
    case CriticalPattern::SelfDualMixed:
      return repeat({Segment::point(a)}, t.k) +
             repeat({Segment{a.line, a.index, a.index + 1}, Segment{a.line, a.index - 1, a.index}}, t.l);
  }
  return {};
}

std::optional<CriticalType> classify_critical(const CuspContext& ctx, const SigmaContext& sigma,
                                              const Multisegment& m) {
  if (!is_critical(ctx, sigma, m)) return std::nullopt;

  for (const auto& alpha : sigma.cuspred) {
    if (expo_point(ctx, alpha) < 0) continue;
    const CuspPoint at = tilde_point(ctx, alpha);
    const int n = m.point_count();

    // AlphaPowers: count the two singletons.
    int k = 0;
    int l = 0;
    bool singletons = true;
    for (const auto& s : m) {
      if (s == Segment::point(alpha)) {
        ++k;
      } else if (s == Segment::point(at)) {
        ++l;
      } else {
        singletons = false;
      }
    }
    const bool adjacent = at == alpha.shifted(-1);
    if (singletons && !(adjacent && k > 0 && l > 0)) {
      return CriticalType{CriticalPattern::AlphaPowers, alpha, k, l};
    }

    const int zlen = alpha.index - at.index + 1;
    if (n % zlen == 0) {
      const int reps = n / zlen;
      for (auto pattern : {CriticalPattern::ZPower, CriticalPattern::LPower}) {
        const CriticalType t{pattern, alpha, reps, 0};
        if (critical_instance(ctx, t) == m) return t;
      }
    }

    if (at == alpha) {
      const Multisegment pair{Segment{alpha.line, alpha.index, alpha.index + 1},
                              Segment{alpha.line, alpha.index - 1, alpha.index}};
      const int pairs = static_cast<int>(std::count(m.begin(), m.end(), pair.segments()[1]));
      const CriticalType t{CriticalPattern::SelfDualMixed, alpha, n - 4 * pairs, pairs};
      if (pairs > 0 && t.k >= 0 && critical_instance(ctx, t) == m) return t;
    }
  }
  throw Error(ErrorCode::ClassificationGap, "critical multisegment matches no known pattern");
}

std::vector<Multisegment> critical_pattern_instances(const CuspContext& ctx, const SigmaContext& sigma,
                                                     LineId line, int lo, int hi, int max_points) {
  std::set<Multisegment> out;
  auto keep = [&](const CriticalType& t) {
    Multisegment m = critical_instance(ctx, t);
    if (m.empty() || m.point_count() > max_points) return;
    for (const auto& p : m.support()) {
      if (p.index < lo || p.index > hi) return;
    }
    out.insert(std::move(m));
  };
  for (const auto& alpha : sigma.cuspred) {
    if (alpha.line != line || expo_point(ctx, alpha) < 0) continue;
    const CuspPoint at = tilde_point(ctx, alpha);
    const bool adjacent = at == alpha.shifted(-1);
    for (int k = 0; k <= max_points; ++k) {
      for (int l = 0; k + l <= max_points; ++l) {
        if (adjacent && k > 0 && l > 0) continue;
        if (at == alpha && l > 0) continue;
        keep({CriticalPattern::AlphaPowers, alpha, k, l});
      }
      keep({CriticalPattern::ZPower, alpha, k, 0});
      keep({CriticalPattern::LPower, alpha, k, 0});
      if (at == alpha) {
        for (int l = 1; k + 4 * l <= max_points; ++l) keep({CriticalPattern::SelfDualMixed, alpha, k, l});
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace segcalc

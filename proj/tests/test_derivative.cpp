#include "support.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "segcalc/derivative.hpp"
#include "segcalc/enumerate.hpp"
#include "segcalc/error.hpp"

using namespace segcalc;
using namespace segcalc::test;

namespace {

// True when some injection sends each `from[i]` to a distinct `to[j]` with ok(from[i], to[j]).
bool injection_exists(const std::vector<Segment>& from, const std::vector<Segment>& to,
                      const std::function<bool(const Segment&, const Segment&)>& ok) {
  std::vector<bool> used(to.size(), false);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == from.size()) return true;
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (used[j] || !ok(from[i], to[j])) continue;
      used[j] = true;
      if (place(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return place(0);
}

PointSet left_oracle(const Multisegment& m) {
  PointSet out;
  for (const auto& s : m) {
    std::vector<Segment> here, next;
    for (const auto& t : m) {
      if (t.b == s.b) here.push_back(t);
      if (t.b == s.b + 1) next.push_back(t);
    }
    if (!injection_exists(here, next, [](const Segment& a, const Segment& b) { return precedes(a, b); })) {
      out.insert(s.begin_point());
    }
  }
  return out;
}

PointSet right_oracle(const Multisegment& m) {
  PointSet out;
  for (const auto& s : m) {
    std::vector<Segment> here, prev;
    for (const auto& t : m) {
      if (t.e == s.e) here.push_back(t);
      if (t.e == s.e - 1) prev.push_back(t);
    }
    if (!injection_exists(here, prev, [](const Segment& a, const Segment& b) { return precedes(b, a); })) {
      out.insert(s.end_point());
    }
  }
  return out;
}

}  // namespace

TEST_CASE("non-reduced point sets") {
  const auto ctx = CuspContext::self_dual_line();
  CHECK(lnrset(ctx, ms(ctx, "[r[0],r[2]] + [r[-1],r[0]]")) == PointSet{{0, 0}});
  CHECK(lnrset(ctx, ms(ctx, "[r[1],r[1]] + [r[1],r[1]]")) == PointSet{{0, 1}});
  CHECK(lnrset(ctx, Multisegment{}).empty());
  CHECK(rnrset(ctx, ms(ctx, "[r[0],r[2]] + [r[-1],r[0]]")) == PointSet{{0, 0}, {0, 2}});
}

TEST_CASE("matching agrees with exhaustive injection search") {
  const auto ctx = CuspContext::self_dual_line();
  for (const auto& m : enumerate_multisegments(ctx, 0, {-2, 2}, 6)) {
    CAPTURE(to_string(ctx, m));
    CHECK(lnrset(ctx, m) == left_oracle(m));
    CHECK(rnrset(ctx, m) == right_oracle(m));
  }
}

TEST_CASE("ladder formula for the left set") {
  const auto ctx = CuspContext::self_dual_line();
  for (const auto& m : enumerate_ladders(0, {-3, 3}, 3)) {
    CAPTURE(to_string(ctx, m));
    CHECK(lnrset_ladder(m) == lnrset(ctx, m));
  }
}

TEST_CASE("single-point derivatives") {
  const auto ctx = CuspContext::self_dual_line();
  CHECK(left_derivative(ctx, ms(ctx, "[r[0],r[2]]"), {0, 0}) == ms(ctx, "[r[1],r[2]]"));
  CHECK(left_derivative(ctx, ms(ctx, "[r[1],r[2]]"), {0, 0}) == ms(ctx, "[r[1],r[2]]"));
  CHECK(left_derivative(ctx, ms(ctx, "[r[1],r[1]] + [r[1],r[1]]"), {0, 1}).empty());
  CHECK(right_derivative(ctx, ms(ctx, "[r[0],r[2]]"), {0, 2}) == ms(ctx, "[r[0],r[1]]"));
}

TEST_CASE("derivative sets") {
  const auto ctx = CuspContext::self_dual_line();
  CHECK(derivative_DAB(ctx, ms(ctx, "[r[0],r[2]]"), {{0, 0}}, {{0, 0}}) == ms(ctx, "[r[1],r[2]]"));
  const auto m = ms(ctx, "[r[0],r[2]] + [r[-1],r[0]] + [r[3],r[3]]");
  CHECK(derivative_DAB(ctx, m, {}, {}) == m);
  CHECK(derivative_DAB(ctx, ms(ctx, "[r[1],r[1]] + [r[-1],r[-1]]"), {{0, -1}}, {{0, 1}}).empty());
}

TEST_CASE("left derivatives are reduced, idempotent and among the valid truncations") {
  const auto ctx = CuspContext::self_dual_line();
  for (const auto& m : enumerate_multisegments(ctx, 0, {-2, 2}, 5)) {
    for (int i = -2; i <= 2; ++i) {
      const CuspPoint rho{0, i};
      const auto d = left_derivative(ctx, m, rho);
      CAPTURE(to_string(ctx, m));
      CAPTURE(i);
      CHECK_FALSE(lnrset(ctx, d).contains(rho));
      CHECK(left_derivative(ctx, d, rho) == d);
      const auto candidates = left_derivative_candidates(ctx, m, rho);
      CHECK(std::find(candidates.begin(), candidates.end(), d) != candidates.end());
    }
  }
}

TEST_CASE("minimal and critical") {
  const auto cfg = self_dual_config({1});
  const auto& ctx = cfg.ctx;
  CHECK(is_critical(ctx, cfg.sigma, ms(ctx, "[r[1],r[1]] + [r[-1],r[-1]]")));
  CHECK_FALSE(is_minimal(ctx, cfg.sigma, ms(ctx, "[r[0],r[2]]")));
  CHECK(is_minimal(ctx, cfg.sigma, Multisegment{}));
  CHECK_FALSE(is_critical(ctx, cfg.sigma, Multisegment{}));
}

TEST_CASE("critical pattern classification") {
  const auto cfg = self_dual_config({1});
  const auto& ctx = cfg.ctx;
  const auto alpha = classify_critical(ctx, cfg.sigma, ms(ctx, "[r[1],r[1]] + [r[1],r[1]]"));
  REQUIRE(alpha);
  CHECK(alpha->pattern == CriticalPattern::AlphaPowers);
  CHECK(alpha->k + alpha->l == 2);
  CHECK(alpha->k * alpha->l == 0);

  const auto zpow = classify_critical(ctx, cfg.sigma, ms(ctx, "[r[-1],r[1]] + [r[-1],r[1]]"));
  REQUIRE(zpow);
  CHECK(zpow->pattern == CriticalPattern::ZPower);
  CHECK(zpow->k == 2);

  const auto self_dual = self_dual_config({0});
  const auto mixed = classify_critical(self_dual.ctx, self_dual.sigma,
                                       ms(self_dual.ctx, "[r[0],r[1]] + [r[-1],r[0]]"));
  REQUIRE(mixed);
  CHECK(mixed->pattern == CriticalPattern::SelfDualMixed);
  CHECK(mixed->k == 0);
  CHECK(mixed->l == 1);

  CHECK_FALSE(classify_critical(ctx, cfg.sigma, ms(ctx, "[r[0],r[2]]")));
}

TEST_CASE("critical multisegments are exactly the pattern instances") {
  for (int a : {0, 1}) {
    const auto cfg = self_dual_config({a});
    std::set<Multisegment> found;
    for (const auto& m : enumerate_multisegments(cfg.ctx, 0, {-2, 2}, 4)) {
      if (is_critical(cfg.ctx, cfg.sigma, m)) found.insert(m);
    }
    const auto shapes = critical_pattern_instances(cfg.ctx, cfg.sigma, 0, -2, 2, 4);
    CHECK(found == std::set<Multisegment>(shapes.begin(), shapes.end()));
  }
}

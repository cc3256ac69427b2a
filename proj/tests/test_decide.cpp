#include "support.hpp"

#include "segcalc/decide.hpp"
#include "segcalc/enumerate.hpp"
#include "segcalc/error.hpp"

using namespace segcalc;
using namespace segcalc::test;

namespace {

ErrorCode error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ConfigError;
}

}  // namespace

TEST_CASE("GL product irreducibility") {
  const auto ctx = CuspContext::self_dual_line();
  const auto linked_pair = gl_irreducible_product(ctx, ms(ctx, "[r[0],r[1]]"), ms(ctx, "[r[1],r[2]]"));
  CHECK(linked_pair.status == Status::Reducible);
  REQUIRE(linked_pair.witness);
  CHECK(*linked_pair.witness == GlTriple{0, 0, 1, false});

  const auto reversed = gl_irreducible_product(ctx, ms(ctx, "[r[1],r[2]]"), ms(ctx, "[r[0],r[1]]"));
  CHECK(reversed.status == Status::Reducible);
  REQUIRE(reversed.witness);
  CHECK(reversed.witness->swapped);

  CHECK(gl_irreducible_product(ctx, ms(ctx, "[r[0],r[2]]"), ms(ctx, "[r[0],r[1]]")).status == Status::Irreducible);
  CHECK(gl_irreducible_product(ctx, Multisegment{}, ms(ctx, "[r[0],r[3]] + [r[1],r[2]]")).status ==
        Status::Irreducible);
  CHECK(gl_irreducible_product(ctx, ms(ctx, "[r[0],r[3]] + [r[1],r[2]]"), ms(ctx, "[r[5],r[5]]")).status ==
        Status::Unknown);
}

TEST_CASE("GL product of two segments is reducible exactly when they are linked") {
  const auto ctx = CuspContext::self_dual_line();
  const auto segs = window_segments(0, {-3, 3});
  for (const auto& a : segs) {
    for (const auto& b : segs) {
      const auto v = gl_irreducible_product(ctx, Multisegment{a}, Multisegment{b});
      CHECK((v.status == Status::Reducible) == linked(a, b));
    }
  }
}

TEST_CASE("two-segment decisions") {
  const auto cfg = self_dual_config({4});
  const auto& ctx = cfg.ctx;
  const auto a = decide_two_segments(ctx, cfg.sigma, seg(ctx, "[r[0],r[2]]"), seg(ctx, "[r[-3],r[-1]]"));
  CHECK(a.status == Status::Reducible);
  CHECK(a.certificate.front().witness.at("expo_product") == "-2");
  CHECK(decide_two_segments(ctx, cfg.sigma, seg(ctx, "[r[0],r[2]]"), seg(ctx, "[r[-1],r[0]]")).status ==
        Status::Irreducible);
  CHECK(decide_two_segments(ctx, cfg.sigma, seg(ctx, "[r[1],r[2]]"), seg(ctx, "[r[-2],r[-1]]")).status ==
        Status::Irreducible);
  CHECK(error_of([&] { decide_two_segments(ctx, cfg.sigma, seg(ctx, "[r[3],r[4]]"), seg(ctx, "[r[0],r[0]]")); }) ==
        ErrorCode::PreconditionViolated);
}

TEST_CASE("decide: support meets a reducibility point") {
  const auto cfg = self_dual_config({1});
  const auto d = decide(cfg.ctx, cfg.sigma, ms(cfg.ctx, "[r[1],r[1]]"));
  CHECK(d.status == Status::Reducible);
  CHECK(d.certificate.front().rule == "R1-mainred");
  CHECK(d.certificate.front().anchor == "Thm mainred");
}

TEST_CASE("decide: a point next to its own tilde") {
  const auto cfg = self_dual_config({5}, -1, "s");
  const auto d = decide(cfg.ctx, cfg.sigma, ms(cfg.ctx, "[s[0],s[0]] + [s[0],s[0]]"));
  CHECK(d.status == Status::Reducible);
  CHECK(d.certificate.front().rule == "R3-unlinked");
}

TEST_CASE("decide: doubled segment against a distant reducibility point") {
  const auto cfg = self_dual_config({2});
  const auto& ctx = cfg.ctx;
  const auto m = ms(ctx, "[r[0],r[1]] + [r[0],r[1]]");
  const auto d = decide(ctx, cfg.sigma, m);
  CHECK(d.status == Status::Reducible);
  CHECK(d.certificate.front().rule == "R3-unlinked");
  const auto pos = positive_part(ctx, m);
  const auto tilde_pos = positive_part(ctx, tilde_multi(ctx, m));
  CHECK(gl_irreducible_product(ctx, pos, tilde_pos).status == Status::Irreducible);
}

TEST_CASE("decide: two-segment ladder") {
  const auto cfg = self_dual_config({4});
  const auto& ctx = cfg.ctx;
  const auto m = ms(ctx, "[r[0],r[2]] + [r[-1],r[0]]");
  const auto d = decide(ctx, cfg.sigma, m);
  CHECK(d.status == Status::Irreducible);
  CHECK(d.certificate.front().rule == "R4-twosegments");

  const auto ladder = decide(ctx, cfg.sigma, m, DecideOptions{}.without(Rule::R4));
  CHECK(ladder.status == Status::Irreducible);
  REQUIRE(ladder.certificate.size() == 1);
  CHECK(ladder.certificate[0].rule == "R5-mainintred");
  CHECK(ladder.certificate[0].anchor == "Thm 1.2");
  CHECK(ladder.certificate[0].witness ==
        std::map<std::string, std::string>{{"m_pos", "[r[0],r[2]]"}, {"m_tilde_pos", "[r[0],r[1]]"}});
  CHECK(evaluate_rule(ctx, cfg.sigma, m, Rule::R5) == Status::Irreducible);
}

TEST_CASE("decide: non-self-dual lines factor out") {
  const auto pq = paired_context();
  const SigmaContext sigma;
  CHECK(decide(pq, sigma, ms(pq, "[p[0],p[1]]")).status == Status::Irreducible);
  const auto d = decide(pq, sigma, ms(pq, "[p[0],p[1]] + [q[-3],q[-2]]"));
  CHECK(d.status == Status::Reducible);
  CHECK(d.certificate.front().rule == "R2-factorization");
  CHECK(decide(pq, sigma, ms(pq, "[p[0],p[1]] + [q[-1],q[0]]")).status == Status::Irreducible);
}

TEST_CASE("decide: Unknown is reported with a reason") {
  const auto cfg = self_dual_config({7});
  const auto d = decide(cfg.ctx, cfg.sigma, ms(cfg.ctx, "[r[0],r[3]] + [r[1],r[2]] + [r[2],r[4]]"));
  CHECK(d.status == Status::Unknown);
  CHECK(d.certificate.empty());
  CHECK_FALSE(d.reason.empty());
}

TEST_CASE("decisions are tilde invariant and replay from their certificates") {
  for (int a : {0, 1, 3}) {
    const auto cfg = self_dual_config({a});
    for (const auto& m : enumerate_multisegments(cfg.ctx, 0, {-2, 2}, 4)) {
      const auto d = decide(cfg.ctx, cfg.sigma, m);
      CAPTURE(to_string(cfg.ctx, m));
      CHECK(decide(cfg.ctx, cfg.sigma, tilde_multi(cfg.ctx, m)).status == d.status);
      if (d.status == Status::Unknown) continue;
      REQUIRE_FALSE(d.certificate.empty());
      const auto rule = rule_from_name(d.certificate.front().rule);
      REQUIRE(rule);
      CHECK(evaluate_rule(cfg.ctx, cfg.sigma, m, *rule) == d.status);
    }
  }
}

TEST_CASE("socle descriptors") {
  const auto cfg = self_dual_config({4});
  const auto& ctx = cfg.ctx;
  const auto d = socle_descriptor(ctx, cfg.sigma, ms(ctx, "[r[0],r[2]] + [r[-1],r[0]]"), std::nullopt);
  CHECK(d.n == ms(ctx, "[r[0],r[2]] + [r[0],r[1]]"));
  CHECK(d.zero_part.empty());
  CHECK(to_string(ctx, cfg.sigma, d) == "Z([r[0],r[1]] + [r[0],r[2]]; Z(0) ⋊ sigma)");

  const auto zero = socle_descriptor(ctx, cfg.sigma, ms(ctx, "[r[-2],r[2]]"), std::nullopt);
  CHECK(zero.n.empty());
  CHECK(zero.zero_part == ms(ctx, "[r[-2],r[2]]"));

  const auto needs_hint = ms(ctx, "[r[1],r[2]] + [r[-3],r[-3]]");
  CHECK(error_of([&] { socle_descriptor(ctx, cfg.sigma, needs_hint, std::nullopt); }) ==
        ErrorCode::MissingSocleHint);
  const auto hint = ms(ctx, "[r[1],r[3]]");
  CHECK(socle_descriptor(ctx, cfg.sigma, needs_hint, hint).n == hint);
}

TEST_CASE("rule names round-trip") {
  for (Rule r : kAllRules) CHECK(rule_from_name(rule_name(r)) == r);
  CHECK_FALSE(rule_from_name("R7"));
}

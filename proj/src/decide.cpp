#include "segcalc/decide.hpp"

#include <algorithm>

#include "segcalc/error.hpp"
#include "segcalc/format.hpp"

namespace segcalc {
namespace {

struct Outcome {
  Status status = Status::Unknown;
  std::vector<RuleApplication> certificate;
  std::string reason;
};

std::string triple_text(const GlTriple& t) {
  return "(" + std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.len) + ")" +
         (t.swapped ? " reversed" : "");
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

Outcome combine(std::vector<Status> parts) {
  Outcome out;
  if (std::find(parts.begin(), parts.end(), Status::Reducible) != parts.end()) {
    out.status = Status::Reducible;
  } else if (std::all_of(parts.begin(), parts.end(), [](Status s) { return s == Status::Irreducible; })) {
    out.status = Status::Irreducible;
  }
  return out;
}

std::optional<Outcome> rule_r1(const CuspContext& ctx, const SigmaContext& sigma, const Multisegment& m) {
  for (const auto& p : m.support()) {
    if (sigma.cuspred.contains(p)) {
      return Outcome{Status::Reducible, {{"R1-mainred", "Thm mainred", {{"point", to_string(ctx, p)}}}}, {}};
    }
  }
  return std::nullopt;
}

std::optional<Outcome> rule_r2(const CuspContext& ctx, const SigmaContext& sigma, const Multisegment& m,
                               const DecideOptions& options) {
  std::map<LineId, Multisegment> by_line;
  for (const auto& s : m) by_line[s.line].add(s);
  if (by_line.empty()) return std::nullopt;
  if (by_line.size() == 1 && ctx.is_self_dual(by_line.begin()->first)) return std::nullopt;

  RuleApplication head{"R2-factorization", "Prop line-factorization", {}};
  std::vector<RuleApplication> nested;
  std::vector<Status> parts;
  for (const auto& [line, part] : by_line) {
    const std::string key = "line " + ctx.name(line);
    if (ctx.is_self_dual(line)) {
      Decision sub = decide(ctx, sigma, part, options);
      head.witness[key] = std::string(status_name(sub.status));
      parts.push_back(sub.status);
      for (auto& c : sub.certificate) nested.push_back(std::move(c));
    } else {
      head.witness[key] = "irreducible (non-self-dual)";
      parts.push_back(Status::Irreducible);
    }
  }
  for (const auto& [i, pi] : by_line) {
    for (const auto& [j, pj] : by_line) {
      if (i >= j || ctx.tilde_line(j) != i) continue;
      const auto verdict = gl_irreducible_product(ctx, pi, tilde_multi(ctx, pj));
      std::string text(status_name(verdict.status));
      if (verdict.witness) text += " " + triple_text(*verdict.witness);
      head.witness[ctx.name(i) + " x tilde " + ctx.name(j)] = text;
      parts.push_back(verdict.status);
    }
  }

  Outcome out = combine(parts);
  out.certificate.push_back(std::move(head));
  for (auto& c : nested) out.certificate.push_back(std::move(c));
  if (out.status == Status::Unknown) out.reason = "a line factor or cross product is undecided";
  return out;
}

std::optional<Outcome> rule_r3(const CuspContext& ctx, const Multisegment& m) {
  const auto& s = m.segments();
  if (s.empty()) {
    return Outcome{Status::Irreducible, {{"R3-unlinked", "Thm Zelclass(3)", {{"segments", "0"}}}}, {}};
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (linked(s[i], s[j])) return std::nullopt;
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (linked(s[i], tilde_seg(ctx, s[j]))) {
        return Outcome{Status::Reducible,
                       {{"R3-unlinked",
                         "Thm Zelclass(3)",
                         {{"segment", to_string(ctx, s[i])}, {"linked_with_tilde_of", to_string(ctx, s[j])}}}},
                       {}};
      }
    }
  }
  return Outcome{Status::Irreducible,
                 {{"R3-unlinked", "Thm Zelclass(3)", {{"segments", std::to_string(s.size())}}}},
                 {}};
}

std::optional<Outcome> rule_r4(const CuspContext& ctx, const SigmaContext& sigma, const Multisegment& m) {
  if (m.size() != 2) return std::nullopt;
  const auto& s = m.segments();
  for (const auto& p : m.support()) {
    if (sigma.cuspred.contains(p)) return std::nullopt;
  }
  Decision d = decide_two_segments(ctx, sigma, s[0], s[1]);
  return Outcome{d.status, std::move(d.certificate), {}};
}

Outcome gl_outcome(const CuspContext& ctx, const Multisegment& m, RuleApplication head) {
  const Multisegment pos = positive_part(ctx, m);
  const Multisegment tilde_pos = positive_part(ctx, tilde_multi(ctx, m));
  const auto verdict = gl_irreducible_product(ctx, pos, tilde_pos);
  head.witness["m_pos"] = to_string(ctx, pos);
  head.witness["m_tilde_pos"] = to_string(ctx, tilde_pos);
  if (verdict.witness) head.witness["gl_witness"] = triple_text(*verdict.witness);
  Outcome out{verdict.status, {std::move(head)}, {}};
  if (verdict.status == Status::Unknown) out.reason = "positive product is not a ladder product";
  return out;
}

std::optional<Outcome> rule_r5(const CuspContext& ctx, const Multisegment& m) {
  if (m.empty() || !is_ladder(m)) return std::nullopt;
  return gl_outcome(ctx, m, {"R5-mainintred", "Thm 1.2", {}});
}

std::optional<Outcome> rule_r6(const CuspContext& ctx, const SigmaContext& sigma, const Multisegment& m) {
  if (m.empty() || !m.on_single_line()) return std::nullopt;
  const LineId line = m.segments().front().line;
  for (const auto& alpha : sigma.cuspred) {
    if (alpha.line != line) continue;
    if (std::abs(alpha.index - tilde_point(ctx, alpha).index) > 2) continue;
    Outcome out = gl_outcome(ctx, m, {"R6-genirr", "Cor genirr", {{"alpha", to_string(ctx, alpha)}}});
    if (out.status == Status::Unknown) return std::nullopt;
    return out;
  }
  return std::nullopt;
}

std::optional<Outcome> run_rule(const CuspContext& ctx, const SigmaContext& sigma, const Multisegment& m, Rule rule,
                                const DecideOptions& options) {
  switch (rule) {
    case Rule::R1: return rule_r1(ctx, sigma, m);
    case Rule::R2: return rule_r2(ctx, sigma, m, options);
    case Rule::R3: return rule_r3(ctx, m);
    case Rule::R4: return rule_r4(ctx, sigma, m);
    case Rule::R5: return rule_r5(ctx, m);
    case Rule::R6: return rule_r6(ctx, sigma, m);
  }
  return std::nullopt;
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Reducible: return "reducible";
    case Status::Irreducible: return "irreducible";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::R1: return "R1-mainred";
    case Rule::R2: return "R2-factorization";
    case Rule::R3: return "R3-unlinked";
    case Rule::R4: return "R4-twosegments";
    case Rule::R5: return "R5-mainintred";
    case Rule::R6: return "R6-genirr";
  }
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (Rule r : kAllRules) {
    if (rule_name(r) == name) return r;
  }
  return std::nullopt;
}

std::optional<GlTriple> ladder_socle_triple(const Multisegment& m, const Multisegment& m_prime) {
  const auto a = ladder_order(m);
  const auto b = ladder_order(m_prime);
  const int t = static_cast<int>(a.size());
  const int tp = static_cast<int>(b.size());
  // 1-based access as in the criterion.
  auto A = [&](int k) { return a[static_cast<std::size_t>(k - 1)]; };
  auto B = [&](int k) { return b[static_cast<std::size_t>(k - 1)]; };
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < tp; ++j) {
      for (int len = 1; i + len <= t && j + len <= tp; ++len) {
        if (!precedes(A(i + len), B(j + len))) break;
        const bool left_ok = i == 0 || !precedes(A(i).shifted(-1), B(j + 1));
        const bool right_ok = j + len == tp || !precedes(A(i + len).shifted(-1), B(j + len + 1));
        if (left_ok && right_ok) return GlTriple{i, j, len, false};
      }
    }
  }
  return std::nullopt;
}

GlProductVerdict gl_irreducible_product(const CuspContext&, const Multisegment& m1, const Multisegment& m2) {
  if (m1.empty() || m2.empty()) return {Status::Irreducible, std::nullopt};
  if (!is_ladder(m1) || !is_ladder(m2)) return {Status::Unknown, std::nullopt};
  if (auto w = ladder_socle_triple(m1, m2)) return {Status::Reducible, w};
  if (auto w = ladder_socle_triple(m2, m1)) {
    w->swapped = true;
    return {Status::Reducible, w};
  }
  return {Status::Irreducible, std::nullopt};
}

Decision decide_two_segments(const CuspContext& ctx, const SigmaContext& sigma, const Segment& d1,
                             const Segment& d2) {
  for (const auto& s : {d1, d2}) {
    for (int i = s.b; i <= s.e; ++i) {
      if (sigma.cuspred.contains({s.line, i})) {
        throw Error(ErrorCode::PreconditionViolated, "segment " + to_string(ctx, s) + " meets cuspred");
      }
    }
  }
  const bool with_tilde = linked(d1, tilde_seg(ctx, d2));
  const bool plain = linked(d1, d2);
  const Rational product = expo_seg(ctx, d1) * expo_seg(ctx, d2);
  Decision d;
  d.status = with_tilde && (!plain || product < 0) ? Status::Reducible : Status::Irreducible;
  d.certificate.push_back({"R4-twosegments",
                           "Thm twosegments",
                           {{"linked_with_tilde", bool_text(with_tilde)},
                            {"linked", bool_text(plain)},
                            {"expo_product", to_string(product)}}});
  return d;
}

Decision decide(const CuspContext& ctx, const SigmaContext& sigma, const Multisegment& m,
                const DecideOptions& options) {
  for (Rule r : kAllRules) {
    if (!options.on(r)) continue;
    auto outcome = run_rule(ctx, sigma, m, r, options);
    if (!outcome) continue;
    // A factorization fixes the verdict even when it is undecided.
    if (outcome->status != Status::Unknown || r == Rule::R2) {
      return {outcome->status, std::move(outcome->certificate), std::move(outcome->reason)};
    }
  }
  return {Status::Unknown, {}, "no implemented rule covers this multisegment"};
}

std::optional<Status> evaluate_rule(const CuspContext& ctx, const SigmaContext& sigma, const Multisegment& m,
                                    Rule rule) {
  auto outcome = run_rule(ctx, sigma, m, rule, DecideOptions{});
  if (!outcome || outcome->status == Status::Unknown) return std::nullopt;
  return outcome->status;
}

std::string to_string(const CuspContext& ctx, const SigmaContext& sigma, const SocleDescriptor& d) {
  return "Z(" + to_string(ctx, d.n) + "; Z(" + to_string(ctx, d.zero_part) + ") ⋊ " + sigma.name + ")";
}

SocleDescriptor socle_descriptor(const CuspContext& ctx, const SigmaContext& sigma, const Multisegment& m,
                                 const std::optional<Multisegment>& soc_hint) {
  const SignSplit split = split_by_sign(ctx, m);
  const Decision base = decide(ctx, sigma, split.zero + split.neg);
  if (base.status != Status::Irreducible) {
    throw Error(ErrorCode::PreconditionViolated, "Z(m_{<=0}) ⋊ " + sigma.name + " is not known to be irreducible");
  }
  const Multisegment tilde_pos = positive_part(ctx, tilde_multi(ctx, m));
  const auto verdict = gl_irreducible_product(ctx, split.pos, tilde_pos);
  if (verdict.status == Status::Irreducible) return {split.pos + tilde_pos, split.zero};
  if (!soc_hint) {
    throw Error(ErrorCode::MissingSocleHint, "socle of the positive product must be supplied");
  }
  return {*soc_hint, split.zero};
}

}  // namespace segcalc

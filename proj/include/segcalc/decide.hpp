#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segcalc/multisegment.hpp"

namespace segcalc {

enum class Status { Reducible, Irreducible, Unknown };

std::string_view status_name(Status s);  // "reducible", ...

struct RuleApplication {
  std::string rule;    // e.g. "R5-mainintred"
  std::string anchor;  // theorem label the rule implements
  std::map<std::string, std::string> witness;
};

struct Decision {
  Status status = Status::Unknown;
  std::vector<RuleApplication> certificate;  // deciding rule first
  std::string reason;                         // set when Unknown
};

// Witness for reducibility of Z(m1) x Z(m2): the integers (i, j, len) for
// the pair (m1, m2), or for (m2, m1) when `swapped`.
struct GlTriple {
  int i = 0;
  int j = 0;
  int len = 1;
  bool swapped = false;
  bool operator==(const GlTriple&) const = default;
};

struct GlProductVerdict {
  Status status = Status::Unknown;
  std::optional<GlTriple> witness;
};

// Triple search for soc(Z(m) x Z(m')) != Z(m + m') on two ladders.
std::optional<GlTriple> ladder_socle_triple(const Multisegment& m, const Multisegment& m_prime);

GlProductVerdict gl_irreducible_product(const CuspContext& ctx, const Multisegment& m1, const Multisegment& m2);

// Both segments must avoid cuspred (PreconditionViolated otherwise).
Decision decide_two_segments(const CuspContext& ctx, const SigmaContext& sigma, const Segment& d1,
                             const Segment& d2);

enum class Rule { R1, R2, R3, R4, R5, R6 };
inline constexpr std::array kAllRules{Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5, Rule::R6};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);

struct DecideOptions {
  std::array<bool, 6> enabled{true, true, true, true, true, true};

  bool on(Rule r) const { return enabled[static_cast<std::size_t>(r)]; }
  DecideOptions without(Rule r) const {
    DecideOptions o = *this;
    o.enabled[static_cast<std::size_t>(r)] = false;
    return o;
  }
};

Decision decide(const CuspContext& ctx, const SigmaContext& sigma, const Multisegment& m,
                const DecideOptions& options = {});

// One rule alone: its verdict when it applies and is decisive, else nullopt.
std::optional<Status> evaluate_rule(const CuspContext& ctx, const SigmaContext& sigma, const Multisegment& m,
                                    Rule rule);

struct SocleDescriptor {
  Multisegment n;
  Multisegment zero_part;
};

std::string to_string(const CuspContext& ctx, const SigmaContext& sigma, const SocleDescriptor& d);

// Throws PreconditionViolated unless Z(m_{<=0}) ⋊ sigma is irreducible, and
// MissingSocleHint when the positive product is not known to be irreducible
// and no hint is given.
SocleDescriptor socle_descriptor(const CuspContext& ctx, const SigmaContext& sigma, const Multisegment& m,
                                 const std::optional<Multisegment>& soc_hint);

}  // namespace segcalc

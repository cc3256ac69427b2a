#include "segcalc/cusp.hpp"

#include <algorithm>
#include <map>

#include "segcalc/error.hpp"

namespace segcalc {

CuspContext::CuspContext(std::vector<CuspLine> lines) : lines_(std::move(lines)) {
  std::sort(lines_.begin(), lines_.end(),
            [](const CuspLine& a, const CuspLine& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < lines_.size(); ++i) {
    if (lines_[i].name == lines_[i - 1].name) {
      throw Error(ErrorCode::ConfigError, "duplicate line name '" + lines_[i].name + "'");
    }
  }
  if (lines_.size() > 0xffff) throw Error(ErrorCode::ConfigError, "too many lines");

  tilde_line_.resize(lines_.size());
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    const auto& l = lines_[i];
    if (l.name.empty()) throw Error(ErrorCode::ConfigError, "empty line name");
    if (l.deg < 1) throw Error(ErrorCode::ConfigError, "line '" + l.name + "' has deg < 1");
    if (const auto* p = std::get_if<Paired>(&l.tilde)) {
      auto partner = find(p->partner);
      if (!partner) {
        throw Error(ErrorCode::BrokenPairing,
                    "line '" + l.name + "' is paired with unknown line '" + p->partner + "'");
      }
      tilde_line_[i] = *partner;
    } else {
      tilde_line_[i] = static_cast<LineId>(i);
    }
  }
}

CuspContext CuspContext::self_dual_line(std::string name, int t0) {
  CuspLine line;
  line.name = std::move(name);
  line.tilde = SelfDual{t0};
  line.expo0 = Rational(-t0, 2);
  return CuspContext({line});
}

const CuspLine& CuspContext::line(LineId id) const {
  if (id >= lines_.size()) {
    throw Error(ErrorCode::UnknownLine, "line id " + std::to_string(id) + " not in context");
  }
  return lines_[id];
}

std::optional<LineId> CuspContext::find(std::string_view name) const {
  auto it = std::lower_bound(lines_.begin(), lines_.end(), name,
                             [](const CuspLine& l, std::string_view n) { return l.name < n; });
  if (it == lines_.end() || it->name != name) return std::nullopt;
  return static_cast<LineId>(it - lines_.begin());
}

LineId CuspContext::id(std::string_view name) const {
  if (auto found = find(name)) return *found;
  throw Error(ErrorCode::UnknownLine, "no line named '" + std::string(name) + "'");
}

bool CuspContext::is_self_dual(LineId id) const {
  return std::holds_alternative<SelfDual>(line(id).tilde);
}

LineId CuspContext::tilde_line(LineId id) const {
  line(id);
  return tilde_line_[id];
}

Rational expo_point(const CuspContext& ctx, CuspPoint p) {
  return ctx.line(p.line).expo0 + p.index;
}

CuspPoint tilde_point(const CuspContext& ctx, CuspPoint p) {
  const auto& l = ctx.line(p.line);
  if (const auto* sd = std::get_if<SelfDual>(&l.tilde)) return {p.line, sd->t0 - p.index};
  const auto& pr = std::get<Paired>(l.tilde);
  return {ctx.tilde_line(p.line), pr.c - p.index};
}

void validate_context(const CuspContext& ctx, const SigmaContext& sigma) {
  for (LineId id = 0; id < ctx.size(); ++id) {
    const auto& l = ctx.line(id);
    if (const auto* sd = std::get_if<SelfDual>(&l.tilde)) {
      if (l.expo0 != Rational(-sd->t0, 2)) {
        throw Error(ErrorCode::BadExponentOffset,
                    "line '" + l.name + "': expo0 = " + to_string(l.expo0) + " but -t0/2 = " +
                        to_string(Rational(-sd->t0, 2)));
      }
      continue;
    }
    const auto& pr = std::get<Paired>(l.tilde);
    const LineId partner_id = ctx.tilde_line(id);
    const auto& partner = ctx.line(partner_id);
    const auto* back = std::get_if<Paired>(&partner.tilde);
    if (partner_id == id || back == nullptr || back->partner != l.name || back->c != pr.c) {
      throw Error(ErrorCode::BrokenPairing,
                  "pairing of '" + l.name + "' with '" + pr.partner + "' is not an involution");
    }
    if (partner.deg != l.deg) {
      throw Error(ErrorCode::BrokenPairing,
                  "paired lines '" + l.name + "' and '" + partner.name + "' differ in deg");
    }
    if (partner.expo0 != -(l.expo0 + pr.c)) {
      throw Error(ErrorCode::BrokenPairing,
                  "paired line '" + partner.name + "' must have expo0 = " +
                      to_string(-(l.expo0 + pr.c)));
    }
  }

  std::map<LineId, std::vector<CuspPoint>> by_line;
  for (const auto& p : sigma.cuspred) {
    const auto& l = ctx.line(p.line);
    if (!ctx.is_self_dual(p.line)) {
      throw Error(ErrorCode::CuspredOnNonSelfDualLine,
                  "reducibility point on line '" + l.name + "', which is not self-dual");
    }
    by_line[p.line].push_back(p);
  }
  for (const auto& [id, pts] : by_line) {
    const CuspPoint alpha = pts.front();
    const CuspPoint alpha_tilde = tilde_point(ctx, alpha);
    for (const auto& p : pts) {
      if (p != alpha && p != alpha_tilde) {
        throw Error(ErrorCode::MultipleReducibilityOrbits,
                    "line '" + ctx.name(id) + "' carries more than one tilde-orbit of reducibility points");
      }
    }
  }
}

SigmaContext make_sigma(const CuspContext& ctx, std::span<const CuspPoint> representatives,
                        std::string name) {
  SigmaContext sigma;
  sigma.name = std::move(name);
  sigma.cuspred.insert(representatives.begin(), representatives.end());
  validate_context(ctx, sigma);
  for (const auto& p : representatives) sigma.cuspred.insert(tilde_point(ctx, p));
  return sigma;
}

}  // namespace segcalc

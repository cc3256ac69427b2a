#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "segcalc/rational.hpp"

namespace segcalc {

// Index of a line inside its CuspContext. Contexts number their lines in
// name order, so comparing ids compares names.
using LineId = std::uint16_t;

// tilde(line[n]) = line[t0 - n]
struct SelfDual {
  int t0 = 0;
};

// tilde(line[n]) = partner[c - n]
struct Paired {
  std::string partner;
  int c = 0;
};

using TildeKind = std::variant<SelfDual, Paired>;

struct CuspLine {
  std::string name;
  int deg = 1;
  TildeKind tilde = SelfDual{};
  Rational expo0{0};
};

// The point line[index].
struct CuspPoint {
  LineId line = 0;
  int index = 0;

  CuspPoint shifted(int k) const { return {line, index + k}; }

  auto operator<=>(const CuspPoint&) const = default;
};

class CuspContext {
 public:
  // Sorts the lines by name and resolves partner references.
  // Throws ConfigError on duplicate names and BrokenPairing when a partner
  // does not resolve.
  explicit CuspContext(std::vector<CuspLine> lines);

  // One deg-1 self-dual line with expo0 = -t0/2.
  static CuspContext self_dual_line(std::string name = "r", int t0 = 0);

  std::size_t size() const { return lines_.size(); }
  const std::vector<CuspLine>& lines() const { return lines_; }

  const CuspLine& line(LineId id) const;
  std::optional<LineId> find(std::string_view name) const;
  LineId id(std::string_view name) const;  // throws UnknownLine
  const std::string& name(LineId id) const { return line(id).name; }

  bool is_self_dual(LineId id) const;
  LineId tilde_line(LineId id) const;
  int deg(LineId id) const { return line(id).deg; }

  CuspPoint point(std::string_view name, int index) const { return {id(name), index}; }

 private:
  std::vector<CuspLine> lines_;
  std::vector<LineId> tilde_line_;
};

Rational expo_point(const CuspContext& ctx, CuspPoint p);
CuspPoint tilde_point(const CuspContext& ctx, CuspPoint p);

// Abstract supercuspidal representation of the classical group, known only
// through the set of cuspidal points at which induction reduces.
struct SigmaContext {
  std::set<CuspPoint> cuspred;
  std::string name = "sigma";
};

// Line invariants, pairing closure and the shape constraints on cuspred:
// points sit on self-dual lines, at most one tilde-orbit per line.
void validate_context(const CuspContext& ctx, const SigmaContext& sigma);

// Validates, then closes `representatives` under tilde.
SigmaContext make_sigma(const CuspContext& ctx, std::span<const CuspPoint> representatives,
                        std::string name = "sigma");

}  // namespace segcalc

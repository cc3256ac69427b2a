#pragma once

#include <optional>
#include <set>
#include <vector>

#include "segcalc/multisegment.hpp"

namespace segcalc {

using PointSet = std::set<CuspPoint>;

// Points at which Z(m) is not left (right) reduced, via bipartite matching.
PointSet lnrset(const CuspContext& ctx, const Multisegment& m);
PointSet rnrset(const CuspContext& ctx, const Multisegment& m);
// Direct ladder formula: begins minus the left shifts of begins.
PointSet lnrset_ladder(const Multisegment& ladder);

Multisegment left_derivative(const CuspContext& ctx, const Multisegment& m, CuspPoint rho);
Multisegment right_derivative(const CuspContext& ctx, const Multisegment& m, CuspPoint rho);
// Repeated single-point derivatives over `points` until nothing changes.
Multisegment left_derivative_set(const CuspContext& ctx, Multisegment m, const PointSet& points);
Multisegment right_derivative_set(const CuspContext& ctx, Multisegment m, const PointSet& points);
// Both composition orders; throws InvariantViolation if they disagree.
Multisegment derivative_DAB(const CuspContext& ctx, const Multisegment& m, const PointSet& left,
                            const PointSet& right);

// Every distinct result of truncating some sub-multiset of the segments
// beginning at rho that leaves a left-rho-reduced multisegment.
std::vector<Multisegment> left_derivative_candidates(const CuspContext& ctx, const Multisegment& m,
                                                     CuspPoint rho);

bool is_minimal(const CuspContext& ctx, const SigmaContext& sigma, const Multisegment& m);
bool is_critical(const CuspContext& ctx, const SigmaContext& sigma, const Multisegment& m);

enum class CriticalPattern { AlphaPowers, ZPower, LPower, SelfDualMixed };

struct CriticalType {
  CriticalPattern pattern = CriticalPattern::AlphaPowers;
  CuspPoint alpha;
  int k = 0;
  int l = 0;

  bool operator==(const CriticalType&) const = default;
};

std::string_view pattern_name(CriticalPattern p);

// nullopt for non-critical m; throws ClassificationGap when a critical m
// matches none of the four shapes.
std::optional<CriticalType> classify_critical(const CuspContext& ctx, const SigmaContext& sigma,
                                              const Multisegment& m);

// The multisegment of a pattern instance.
Multisegment critical_instance(const CuspContext& ctx, const CriticalType& type);

// All pattern instances on `line` with point count <= max_points and every
// index inside [lo, hi], generated straight from the pattern shapes.
std::vector<Multisegment> critical_pattern_instances(const CuspContext& ctx, const SigmaContext& sigma,
                                                     LineId line, int lo, int hi, int max_points);

}  // namespace segcalc

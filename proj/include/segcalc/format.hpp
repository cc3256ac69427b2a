#pragma once

#include <string>

#include "segcalc/classical.hpp"
#include "segcalc/derivative.hpp"

namespace segcalc {

std::string to_string(const CuspContext& ctx, CuspPoint p);          // r[-1]
std::string to_string(const CuspContext& ctx, const Segment& s);     // [r[-1],r[0]]
std::string to_string(const CuspContext& ctx, const Multisegment& m);  // a + b, or 0
std::string to_string(const CuspContext& ctx, const IrrLabel& l);    // Z(...)
std::string to_string(const CuspContext& ctx, const Word& w);        // a x b, or 1
std::string to_string(const CuspContext& ctx, const PointSet& s);    // {r[0], r[1]}
std::string to_string(const CuspContext& ctx, const SigmaContext& sigma, const ClassicalLabel& l);

}  // namespace segcalc

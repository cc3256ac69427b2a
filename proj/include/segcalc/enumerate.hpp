#pragma once

#include <functional>
#include <vector>

#include "segcalc/multisegment.hpp"
#include "segcalc/parse.hpp"

namespace segcalc {

// Every multisegment on `line` with all endpoints in `window` and degree at
// most `max_degree`, once each, in increasing canonical order.
void for_each_multisegment(const CuspContext& ctx, LineId line, Window window, int max_degree,
                           const std::function<void(const Multisegment&)>& visit);
std::vector<Multisegment> enumerate_multisegments(const CuspContext& ctx, LineId line, Window window,
                                                  int max_degree);

// All segments on `line` inside `window`, canonical order.
std::vector<Segment> window_segments(LineId line, Window window);

// Ladders with at most `max_segments` segments inside `window` (including
// the empty one).
std::vector<Multisegment> enumerate_ladders(LineId line, Window window, int max_segments);

}  // namespace segcalc

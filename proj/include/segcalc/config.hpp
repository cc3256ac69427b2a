#pragma once

#include <string>
#include <string_view>

#include "segcalc/cusp.hpp"

namespace segcalc {

struct Config {
  CuspContext ctx;
  SigmaContext sigma;
};

// Line r, deg 1, self-dual with t0 = 0, empty cuspred.
Config default_config();

// Parses and validates the JSON config; errors are ConfigError or the
// validation codes.
Config parse_config(std::string_view json_text);
Config load_config(const std::string& path);

std::string config_to_json(const Config& cfg);

}  // namespace segcalc

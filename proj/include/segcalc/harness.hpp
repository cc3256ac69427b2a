#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segcalc/config.hpp"
#include "segcalc/parse.hpp"

namespace segcalc {

enum class Execution { Serial, Parallel };

struct SuiteOptions {
  std::optional<Window> window;  // suite default when absent
  std::optional<int> max_degree;
  Execution execution = Execution::Parallel;
  // Context for suites that are not pinned to fixed configurations.
  std::optional<Config> config;
};

struct Failure {
  std::string input;
  std::string expected;
  std::string got;
  auto operator<=>(const Failure&) const = default;
};

struct SuiteReport {
  std::string suite;
  std::int64_t cases = 0;
  std::vector<Failure> failures;  // sorted
  std::vector<std::string> notes;  // informational, sorted
  double wall_time_seconds = 0;

  bool passed() const { return failures.empty(); }
};

std::vector<std::string> suite_names();

// Throws UnknownSuite for unregistered names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace segcalc

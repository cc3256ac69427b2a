// One PASS/FAIL line per acceptance criterion; exit status 1 when any fails.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "segcalc/classical.hpp"
#include "segcalc/decide.hpp"
#include "segcalc/gl_ring.hpp"
#include "segcalc/harness.hpp"
#include "segcalc/parse.hpp"

namespace {

using namespace segcalc;

struct Criterion {
  int id;
  std::string title;
  std::string suite;
  double time_limit_seconds;
  std::int64_t min_cases = 1;
  // Extra spot checks; returns an empty string when they hold.
  std::function<std::string()> extra = [] { return std::string(); };
};

std::string binomial_examples() {
  const auto ctx = CuspContext::self_dual_line();
  const SigmaContext sigma;
  const auto g = gr_z(parse_multisegment(ctx, "[r[0],r[2]] + [r[-1],r[0]]"));
  if (jacmin_length(ctx, g) != 5) return "jacmin of [r0,r2]+[r-1,r0] is not 5";
  if (jacmin_length_classical(ctx, sigma, g) != 160) return "classical jacmin is not 160";
  return {};
}

std::string counterexample_checks() {
  {
    const auto ctx = CuspContext::self_dual_line("s", -1);
    const std::vector<CuspPoint> far{{0, 5}};
    const auto sigma = make_sigma(ctx, far);
    const auto m = parse_multisegment(ctx, "[s[0],s[0]] + [s[0],s[0]]");
    if (decide(ctx, sigma, m).status != Status::Reducible) return "(a) rho + rho is not reducible";
  }
  const auto ctx = CuspContext::self_dual_line("r", 0);
  const std::vector<CuspPoint> alpha{{0, 2}};
  const auto sigma = make_sigma(ctx, alpha);
  const auto m = parse_multisegment(ctx, "[r[0],r[1]] + [r[0],r[1]]");
  if (decide(ctx, sigma, m).status != Status::Reducible) return "(b) decide is not reducible";
  const auto verdict = gl_irreducible_product(ctx, positive_part(ctx, m), positive_part(ctx, tilde_multi(ctx, m)));
  if (verdict.status != Status::Irreducible) return "(b) positive product is not irreducible";
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "ladder lnrset agreement", "ladder-lnrset", 10, 1000},
      {2, "coassociativity", "coassociativity", 10},
      {3, "comod symmetry and closed form", "comod-symmetry", 10},
      {4, "binomial Jacquet identity", "binomial-jacquet", 30, 1, binomial_examples},
      {5, "two-segment and ladder rules agree", "theorem-cross-consistency", 30},
      {6, "critical classification exhaustive", "critical-classification", 60},
      {7, "counterexample reproduction", "counterexamples", 1, 2, counterexample_checks},
      {8, "derivative algebra", "derivative-algebra", 60},
  };

  bool all = true;
  for (const auto& c : criteria) {
    std::string problem;
    SuiteReport report;
    try {
      report = run_suite(c.suite, SuiteOptions{});
      if (!report.passed()) {
        const auto& f = report.failures.front();
        problem = std::to_string(report.failures.size()) + " failures, first " + f.input + ": expected " +
                  f.expected + ", got " + f.got;
      } else if (report.cases < c.min_cases) {
        problem = "only " + std::to_string(report.cases) + " cases";
      } else if (report.wall_time_seconds >= c.time_limit_seconds) {
        problem = "over the time limit";
      } else {
        problem = c.extra();
      }
    } catch (const std::exception& e) {
      problem = e.what();
    }
    const bool ok = problem.empty();
    all = all && ok;
    std::printf("%s [%d] %s: suite=%s cases=%lld time=%.3fs limit=%.0fs%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), c.suite.c_str(), static_cast<long long>(report.cases), report.wall_time_seconds,
                c.time_limit_seconds, ok ? "" : " -- ", problem.c_str());
  }
  return all ? 0 : 1;
}

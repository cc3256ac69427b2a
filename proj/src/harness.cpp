#include "segcalc/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include <omp.h>

#include "segcalc/classical.hpp"
#include "segcalc/decide.hpp"
#include "segcalc/derivative.hpp"
#include "segcalc/enumerate.hpp"
#include "segcalc/error.hpp"
#include "segcalc/format.hpp"

namespace segcalc {
namespace {

struct CaseLog {
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  void fail(std::string input, std::string expected, std::string got) {
    failures.push_back({std::move(input), std::move(expected), std::move(got)});
  }
};

// Evaluates check(input, log) for every input, serially or with OpenMP, and
// folds the per-thread logs into the report.
template <class Input>
void run_cases(const std::vector<Input>& inputs, const std::function<std::string(const Input&)>& describe,
               const std::function<void(const Input&, CaseLog&)>& check, Execution execution,
               SuiteReport& report) {
  const auto n = static_cast<std::int64_t>(inputs.size());
  auto one = [&](std::int64_t i, CaseLog& log) {
    const Input& in = inputs[static_cast<std::size_t>(i)];
    try {
      check(in, log);
    } catch (const std::exception& e) {
      log.fail(describe(in), "no error", e.what());
    }
  };

  CaseLog merged;
  if (execution == Execution::Serial) {
    for (std::int64_t i = 0; i < n; ++i) one(i, merged);
  } else {
#pragma omp parallel
    {
      CaseLog local;
#pragma omp for schedule(dynamic, 8)
      for (std::int64_t i = 0; i < n; ++i) one(i, local);
#pragma omp critical(segcalc_merge)
      {
        merged.failures.insert(merged.failures.end(), local.failures.begin(), local.failures.end());
        merged.notes.insert(merged.notes.end(), local.notes.begin(), local.notes.end());
      }
    }
  }
  report.cases += n;
  report.failures.insert(report.failures.end(), merged.failures.begin(), merged.failures.end());
  report.notes.insert(report.notes.end(), merged.notes.begin(), merged.notes.end());
}

struct Setup {
  CuspContext ctx;
  SigmaContext sigma;
  std::string label;
};

Setup self_dual_setup(int t0, std::optional<int> cuspred_index, std::string name = "r") {
  CuspContext ctx = CuspContext::self_dual_line(name, t0);
  std::vector<CuspPoint> reps;
  if (cuspred_index) reps.push_back({0, *cuspred_index});
  SigmaContext sigma = make_sigma(ctx, reps);
  std::string label = name + " t0=" + std::to_string(t0);
  if (cuspred_index) label += " cuspred=" + name + "[" + std::to_string(*cuspred_index) + "]";
  return {std::move(ctx), std::move(sigma), std::move(label)};
}

Coeff binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Coeff r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<PointSet> small_point_sets(LineId line, int lo, int hi) {
  std::vector<PointSet> out{{}};
  for (int p = lo; p <= hi; ++p) out.push_back({{line, p}});
  for (int p = lo; p < hi; ++p) out.push_back({{line, p}, {line, p + 1}});
  return out;
}

std::string ms(const CuspContext& ctx, const Multisegment& m) { return to_string(ctx, m); }

// Suites ------------------------------------------------------------------

void suite_ladder_lnrset(const SuiteOptions& opt, SuiteReport& rep) {
  const auto s = self_dual_setup(0, std::nullopt);
  const Window w = opt.window.value_or(Window{-4, 4});
  const auto ladders = enumerate_ladders(0, w, 4);
  run_cases<Multisegment>(
      ladders, [&](const Multisegment& m) { return ms(s.ctx, m); },
      [&](const Multisegment& m, CaseLog& log) {
        const PointSet by_matching = lnrset(s.ctx, m);
        const PointSet by_formula = lnrset_ladder(m);
        if (by_matching != by_formula) {
          log.fail(ms(s.ctx, m), to_string(s.ctx, by_formula), to_string(s.ctx, by_matching));
        }
      },
      opt.execution, rep);
}

std::vector<Multisegment> coalgebra_inputs(Window w) {
  std::vector<Multisegment> out;
  for (const auto& seg : window_segments(0, w)) {
    if (seg.length() <= 5) out.push_back({seg});
  }
  for (auto& m : enumerate_ladders(0, w, 3)) {
    if (m.size() >= 2) out.push_back(std::move(m));
  }
  return out;
}

void suite_coassociativity(const SuiteOptions& opt, SuiteReport& rep) {
  const auto s = self_dual_setup(0, std::nullopt);
  const auto inputs = coalgebra_inputs(opt.window.value_or(Window{-4, 4}));
  run_cases<Multisegment>(
      inputs, [&](const Multisegment& m) { return ms(s.ctx, m); },
      [&](const Multisegment& m, CaseLog& log) {
        const GrElement g = gr_z(m);
        const auto left = comult2(s.ctx, g);
        const auto right = comult2_right(s.ctx, g);
        if (left != right) {
          log.fail(ms(s.ctx, m), std::to_string(right.size()) + " terms",
                   std::to_string(left.size()) + " terms, not equal");
        }
      },
      opt.execution, rep);
}

void suite_comod_symmetry(const SuiteOptions& opt, SuiteReport& rep) {
  const auto s = self_dual_setup(0, std::nullopt);
  const auto inputs = coalgebra_inputs(opt.window.value_or(Window{-4, 4}));
  auto sorted = inputs;
  std::sort(sorted.begin(), sorted.end());
  run_cases<Multisegment>(
      inputs, [&](const Multisegment& m) { return ms(s.ctx, m); },
      [&](const Multisegment& m, CaseLog& log) {
        const std::string in = ms(s.ctx, m);
        const auto via = comod_terms_via_comult2(s.ctx, m);
        // Equal once the second slot is read as a classical induced class.
        // The tilde side uses the closed form; its own case ties that to comult2.
        const auto as_classical = [&](const std::vector<TensorKey>& keys) {
          std::vector<GTensorElement::Term> raw;
          raw.reserve(keys.size());
          for (const auto& [left, right] : keys) raw.push_back({{left, classical_label(s.ctx, right)}, 1});
          return GTensorElement(std::move(raw));
        };
        // The relation is symmetric, so a pair {m, tilde m} inside the input
        // set is compared once.
        const Multisegment tm = tilde_multi(s.ctx, m);
        const bool twin_checks = tm < m && std::binary_search(sorted.begin(), sorted.end(), tm);
        if (!twin_checks && as_classical(via) != as_classical(comod_terms_closed_form(s.ctx, tm))) {
          log.fail(in, "comod equals comod of tilde", "differs");
        }

        const auto closed = comod_terms_closed_form(s.ctx, m);
        if (via != closed) {
          log.fail(in, "closed form " + std::to_string(closed.size()) + " terms",
                   "comult2 twist " + std::to_string(via.size()) + " terms, not equal");
        }
        if (m.size() == 1) {
          const auto k = static_cast<std::size_t>(m.segments().front().length());
          if (via.size() != (k + 1) * (k + 2) / 2) {
            log.fail(in, std::to_string((k + 1) * (k + 2) / 2) + " raw terms", std::to_string(via.size()));
          }
        }

        GrElement closed_max;
        for (const auto& w : comodmax_terms_closed_form(s.ctx, m)) closed_max.add(w, 1);
        if (closed_max != comodmax(s.ctx, gr_z(m))) log.fail(in, "comodmax closed form", "differs");
      },
      opt.execution, rep);
}

std::vector<std::pair<Segment, Segment>> linked_pairs(Window w) {
  // (big, small) with small preceding big.
  std::vector<std::pair<Segment, Segment>> out;
  const auto segs = window_segments(0, w);
  for (const auto& big : segs) {
    for (const auto& small : segs) {
      if (precedes(small, big)) out.push_back({big, small});
    }
  }
  return out;
}

void suite_binomial_jacquet(const SuiteOptions& opt, SuiteReport& rep) {
  const auto s = self_dual_setup(0, std::nullopt);
  const auto pairs = linked_pairs(opt.window.value_or(Window{-4, 4}));
  using Pair = std::pair<Segment, Segment>;
  run_cases<Pair>(
      pairs, [&](const Pair& p) { return ms(s.ctx, Multisegment{p.first, p.second}); },
      [&](const Pair& p, CaseLog& log) {
        const Multisegment m{p.first, p.second};
        const int l1 = p.first.length();
        const int n = l1 + p.second.length();
        const auto meet = seg_intersection(p.first, p.second);
        const Coeff expected = binomial(n, l1) - binomial(n, meet ? meet->length() : 0);
        const Coeff got = jacmin_length(s.ctx, gr_z(m));
        if (got != expected) log.fail(ms(s.ctx, m), std::to_string(expected), std::to_string(got));
        const Coeff classical = jacmin_length_classical(s.ctx, s.sigma, gr_z(m));
        if (classical != (Coeff{1} << n) * expected) {
          log.fail(ms(s.ctx, m) + " classical", std::to_string((Coeff{1} << n) * expected), std::to_string(classical));
        }
      },
      opt.execution, rep);
}

void suite_cross_consistency(const SuiteOptions& opt, SuiteReport& rep) {
  const auto pairs = linked_pairs(opt.window.value_or(Window{-4, 4}));
  for (int a : {3, 4, 5}) {
    const auto s = self_dual_setup(0, a);
    std::vector<std::pair<Segment, Segment>> eligible;
    for (const auto& p : pairs) {
      const Multisegment m{p.first, p.second};
      const auto supp = m.support();
      if (std::none_of(supp.begin(), supp.end(), [&](CuspPoint q) { return s.sigma.cuspred.contains(q); })) {
        eligible.push_back(p);
      }
    }
    using Pair = std::pair<Segment, Segment>;
    run_cases<Pair>(
        eligible, [&](const Pair& p) { return s.label + ": " + ms(s.ctx, Multisegment{p.first, p.second}); },
        [&](const Pair& p, CaseLog& log) {
          const Multisegment m{p.first, p.second};
          const auto r4 = evaluate_rule(s.ctx, s.sigma, m, Rule::R4);
          const auto r5 = evaluate_rule(s.ctx, s.sigma, m, Rule::R5);
          auto text = [](const std::optional<Status>& st) {
            return st ? std::string(status_name(*st)) : std::string("not applicable");
          };
          if (!r4 || !r5 || *r4 != *r5) {
            log.fail(s.label + ": " + ms(s.ctx, m), "R4 " + text(r4), "R5 " + text(r5));
          }
        },
        opt.execution, rep);
  }
}

void suite_critical(const SuiteOptions& opt, SuiteReport& rep) {
  const Window w = opt.window.value_or(Window{-3, 3});
  const int degree = opt.max_degree.value_or(6);
  const std::vector<Setup> setups{self_dual_setup(0, 0), self_dual_setup(0, 1), self_dual_setup(-1, 0, "s")};
  for (const auto& s : setups) {
    const auto inputs = enumerate_multisegments(s.ctx, 0, w, degree);
    const auto instances = critical_pattern_instances(s.ctx, s.sigma, 0, w.lo, w.hi, degree);
    const std::set<Multisegment> expected(instances.begin(), instances.end());
    run_cases<Multisegment>(
        inputs, [&](const Multisegment& m) { return s.label + ": " + ms(s.ctx, m); },
        [&](const Multisegment& m, CaseLog& log) {
          const std::string in = s.label + ": " + ms(s.ctx, m);
          const bool critical = is_critical(s.ctx, s.sigma, m);
          const bool listed = expected.contains(m);
          if (critical != listed) {
            log.fail(in, listed ? "critical" : "not critical", critical ? "critical" : "not critical");
            return;
          }
          if (!critical) return;
          const auto type = classify_critical(s.ctx, s.sigma, m);
          if (!type || critical_instance(s.ctx, *type) != m) {
            log.fail(in, "pattern reproducing m", type ? std::string(pattern_name(type->pattern)) : "none");
          }
          log.notes.push_back(in);
        },
        opt.execution, rep);
  }
}

void suite_counterexamples(const SuiteOptions& opt, SuiteReport& rep) {
  struct Item {
    int which;
  };
  const std::vector<Item> items{{0}, {1}};
  run_cases<Item>(
      items, [](const Item& it) { return it.which == 0 ? std::string("s[0] + s[0]") : "[r[0],r[1]] + [r[0],r[1]]"; },
      [&](const Item& it, CaseLog& log) {
        if (it.which == 0) {
          // The far-away cuspred point keeps supp m off cuspred.
          const auto s = self_dual_setup(-1, 5, "s");
          const Multisegment m{Segment{0, 0, 0}, Segment{0, 0, 0}};
          const auto d = decide(s.ctx, s.sigma, m);
          if (d.status != Status::Reducible) log.fail("t0=-1: s[0] + s[0]", "reducible", std::string(status_name(d.status)));
          return;
        }
        const auto s = self_dual_setup(0, 2);
        const Multisegment m{Segment{0, 0, 1}, Segment{0, 0, 1}};
        const auto d = decide(s.ctx, s.sigma, m);
        if (d.status != Status::Reducible) {
          log.fail("cuspred=r[2]: [r[0],r[1]] + [r[0],r[1]]", "reducible", std::string(status_name(d.status)));
        }
        const auto gl = gl_irreducible_product(s.ctx, positive_part(s.ctx, m),
                                               positive_part(s.ctx, tilde_multi(s.ctx, m)));
        if (gl.status != Status::Irreducible) {
          log.fail("cuspred=r[2]: positive product", "irreducible", std::string(status_name(gl.status)));
        }
      },
      opt.execution, rep);
}

void suite_derivative_algebra(const SuiteOptions& opt, SuiteReport& rep) {
  const auto s = self_dual_setup(0, std::nullopt);
  const Window w = opt.window.value_or(Window{-2, 2});
  const int degree = opt.max_degree.value_or(8);
  const auto inputs = enumerate_multisegments(s.ctx, 0, w, degree);
  const auto sets = small_point_sets(0, -3, 3);
  run_cases<Multisegment>(
      inputs, [&](const Multisegment& m) { return ms(s.ctx, m); },
      [&](const Multisegment& m, CaseLog& log) {
        const std::string in = ms(s.ctx, m);
        const auto supp = m.support();
        for (const auto& a : sets) {
          for (const auto& b : sets) {
            const Multisegment d = derivative_DAB(s.ctx, m, a, b);
            const auto dsupp = d.support();
            for (const auto& p : supp) {
              if (a.contains(p) || b.contains(p)) continue;
              if (!std::binary_search(dsupp.begin(), dsupp.end(), p)) {
                log.fail(in + " D(" + to_string(s.ctx, a) + ";" + to_string(s.ctx, b) + ")",
                         "support keeps " + to_string(s.ctx, p), ms(s.ctx, d));
              }
            }
          }
        }
        for (int i = w.lo - 1; i <= w.hi + 1; ++i) {
          const CuspPoint rho{0, i};
          const Multisegment once = left_derivative(s.ctx, m, rho);
          if (left_derivative(s.ctx, once, rho) != once) {
            log.fail(in + " L_" + to_string(s.ctx, rho), "idempotent", "changes on second application");
          }
          if (lnrset(s.ctx, once).contains(rho)) {
            log.fail(in + " L_" + to_string(s.ctx, rho), "left reduced at rho", ms(s.ctx, once));
          }
          const Multisegment rnce = right_derivative(s.ctx, m, rho);
          if (rnrset(s.ctx, rnce).contains(rho)) {
            log.fail(in + " R_" + to_string(s.ctx, rho), "right reduced at rho", ms(s.ctx, rnce));
          }
        }
        for (const auto& seg : m) {
          for (int i = seg.b + 1; i <= seg.e; ++i) {
            const CuspPoint rho{0, i};
            const auto after = left_derivative(s.ctx, m, rho).support();
            if (!std::binary_search(after.begin(), after.end(), rho)) {
              log.fail(in + " L_" + to_string(s.ctx, rho), "rho stays in support", "removed");
            }
            for (int j = w.lo - 1; j <= w.hi + 1; ++j) {
              if (j == i && j == seg.e) continue;
              const auto d = derivative_DAB(s.ctx, m, {rho}, {{0, j}}).support();
              if (!std::binary_search(d.begin(), d.end(), rho)) {
                log.fail(in + " D(" + to_string(s.ctx, rho) + ";r[" + std::to_string(j) + "])", "rho stays in support",
                         "removed");
              }
            }
          }
        }
        if (rnrset(s.ctx, m) != [&] {
              PointSet out;
              for (const auto& p : lnrset(s.ctx, tilde_multi(s.ctx, m))) out.insert(tilde_point(s.ctx, p));
              return out;
            }()) {
          log.fail(in, "rnrset = tilde lnrset tilde", "differs");
        }
      },
      opt.execution, rep);
}

void suite_derivative_choice(const SuiteOptions& opt, SuiteReport& rep) {
  const auto s = self_dual_setup(0, std::nullopt);
  const Window w = opt.window.value_or(Window{-2, 2});
  const int degree = opt.max_degree.value_or(6);
  const auto inputs = enumerate_multisegments(s.ctx, 0, w, degree);
  run_cases<Multisegment>(
      inputs, [&](const Multisegment& m) { return ms(s.ctx, m); },
      [&](const Multisegment& m, CaseLog& log) {
        std::set<CuspPoint> begins;
        for (const auto& seg : m) begins.insert(seg.begin_point());
        for (const auto& rho : begins) {
          const auto candidates = left_derivative_candidates(s.ctx, m, rho);
          const Multisegment greedy = left_derivative(s.ctx, m, rho);
          const std::string in = ms(s.ctx, m) + " at " + to_string(s.ctx, rho);
          if (std::find(candidates.begin(), candidates.end(), greedy) == candidates.end()) {
            log.fail(in, "greedy result among valid truncations", ms(s.ctx, greedy));
          }
          if (candidates.size() > 1) {
            log.notes.push_back(in + ": " + std::to_string(candidates.size()) + " distinct valid truncations");
          }
        }
      },
      opt.execution, rep);
}

void suite_decide_invariants(const SuiteOptions& opt, SuiteReport& rep) {
  const Config cfg = opt.config.value_or(Config{CuspContext::self_dual_line("r", 0), SigmaContext{}});
  SigmaContext sigma = cfg.sigma;
  if (!opt.config) sigma = make_sigma(cfg.ctx, std::vector<CuspPoint>{{0, 4}});
  const CuspContext& ctx = cfg.ctx;
  const Window w = opt.window.value_or(Window{-3, 3});
  const int degree = opt.max_degree.value_or(5);
  std::vector<Multisegment> inputs;
  for (LineId line = 0; line < ctx.size(); ++line) {
    auto part = enumerate_multisegments(ctx, line, w, degree);
    inputs.insert(inputs.end(), part.begin(), part.end());
  }
  run_cases<Multisegment>(
      inputs, [&](const Multisegment& m) { return ms(ctx, m); },
      [&](const Multisegment& m, CaseLog& log) {
        const std::string in = ms(ctx, m);
        const Decision d = decide(ctx, sigma, m);
        const Decision dt = decide(ctx, sigma, tilde_multi(ctx, m));
        if (d.status != dt.status) {
          log.fail(in + " vs tilde", std::string(status_name(d.status)), std::string(status_name(dt.status)));
        }
        if (d.status != Status::Unknown) {
          const auto rule = d.certificate.empty() ? std::nullopt : rule_from_name(d.certificate.front().rule);
          const auto replay = rule ? evaluate_rule(ctx, sigma, m, *rule) : std::nullopt;
          if (!replay || *replay != d.status) log.fail(in + " replay", std::string(status_name(d.status)), "mismatch");
        }
        for (int mask = 1; mask < 8; ++mask) {
          DecideOptions o;
          if (mask & 1) o = o.without(Rule::R4);
          if (mask & 2) o = o.without(Rule::R5);
          if (mask & 4) o = o.without(Rule::R6);
          const Status st = decide(ctx, sigma, m, o).status;
          if (st != d.status && st != Status::Unknown) {
            log.fail(in + " reduced rule set " + std::to_string(mask), std::string(status_name(d.status)),
                     std::string(status_name(st)));
          }
        }
        std::vector<std::pair<Rule, Status>> verdicts;
        for (Rule r : {Rule::R3, Rule::R4, Rule::R5, Rule::R6}) {
          if (auto st = evaluate_rule(ctx, sigma, m, r)) verdicts.push_back({r, *st});
        }
        const auto supp = m.support();
        const bool off_cuspred =
            std::none_of(supp.begin(), supp.end(), [&](CuspPoint p) { return sigma.cuspred.contains(p); });
        for (std::size_t i = 1; off_cuspred && i < verdicts.size(); ++i) {
          if (verdicts[i].second != verdicts[0].second) {
            log.fail(in + " rule overlap", std::string(rule_name(verdicts[0].first)) + " " +
                                               std::string(status_name(verdicts[0].second)),
                     std::string(rule_name(verdicts[i].first)) + " " + std::string(status_name(verdicts[i].second)));
          }
        }
      },
      opt.execution, rep);
}

using SuiteFn = void (*)(const SuiteOptions&, SuiteReport&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites{
      {"ladder-lnrset", suite_ladder_lnrset},
      {"coassociativity", suite_coassociativity},
      {"comod-symmetry", suite_comod_symmetry},
      {"binomial-jacquet", suite_binomial_jacquet},
      {"theorem-cross-consistency", suite_cross_consistency},
      {"critical-classification", suite_critical},
      {"counterexamples", suite_counterexamples},
      {"derivative-algebra", suite_derivative_algebra},
      {"derivative-choice", suite_derivative_choice},
      {"decide-invariants", suite_decide_invariants},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  const auto& suites = registry();
  const auto it = suites.find(name);
  if (it == suites.end()) throw Error(ErrorCode::UnknownSuite, "no suite named '" + name + "'");
  SuiteReport report;
  report.suite = name;
  const auto start = std::chrono::steady_clock::now();
  it->second(options, report);
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::sort(report.failures.begin(), report.failures.end());
  std::sort(report.notes.begin(), report.notes.end());
  return report;
}

}  // namespace segcalc

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "segcalc/classical.hpp"
#include "segcalc/config.hpp"
#include "segcalc/decide.hpp"
#include "segcalc/derivative.hpp"
#include "segcalc/enumerate.hpp"
#include "segcalc/error.hpp"
#include "segcalc/format.hpp"
#include "segcalc/gl_ring.hpp"
#include "segcalc/harness.hpp"
#include "segcalc/parse.hpp"

namespace {

using nlohmann::json;
using namespace segcalc;

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownLine:
    case ErrorCode::ConfigError:
    case ErrorCode::BadExponentOffset:
    case ErrorCode::BrokenPairing:
    case ErrorCode::CuspredOnNonSelfDualLine:
    case ErrorCode::MultipleReducibilityOrbits:
    case ErrorCode::UnknownSuite:
    case ErrorCode::InvalidSegment:
      return true;
    default:
      return false;
  }
}

// Text or JSON sink for one command's result.
class Output {
 public:
  explicit Output(OutputFormat format) : format_(format) {}

  bool json_mode() const { return format_ == OutputFormat::Json; }
  json& doc() { return doc_; }
  void line(const std::string& text) { text_ += text + "\n"; }

  void flush(std::ostream& os) const {
    if (json_mode()) {
      os << doc_.dump() << "\n";
    } else {
      os << text_;
    }
  }

 private:
  OutputFormat format_;
  json doc_ = json::object();
  std::string text_;
};

std::string coeff_prefix(Coeff c) { return c == 1 ? "" : std::to_string(c) + "*"; }

json certificate_json(const std::vector<RuleApplication>& cert) {
  json out = json::array();
  for (const auto& r : cert) {
    json witness = json::object();
    for (const auto& [k, v] : r.witness) witness[k] = v;
    out.push_back({{"rule", r.rule}, {"anchor", r.anchor}, {"witness", witness}});
  }
  return out;
}

const Multisegment& single_label(const Query& q) {
  if (!q.m) throw Error(ErrorCode::SyntaxError, "payload must be a single multisegment");
  return *q.m;
}

int run_decide(const Config& cfg, const Query& q, Output& out) {
  const Decision d = decide(cfg.ctx, cfg.sigma, single_label(q));
  if (out.json_mode()) {
    out.doc()["status"] = status_name(d.status);
    out.doc()["certificate"] = certificate_json(d.certificate);
    if (!d.reason.empty()) out.doc()["reason"] = d.reason;
    return kExitPass;
  }
  out.line(std::string(status_name(d.status)));
  for (const auto& r : d.certificate) {
    std::string text = "  " + r.rule + " [" + r.anchor + "]";
    for (const auto& [k, v] : r.witness) text += " " + k + "=" + v;
    out.line(text);
  }
  if (!d.reason.empty()) out.line("  reason: " + d.reason);
  return kExitPass;
}

void emit_tensor(const CuspContext& ctx, const TensorElement& t, Output& out) {
  json terms = json::array();
  for (const auto& [k, c] : t) {
    terms.push_back({{"coeff", c}, {"left", to_string(ctx, k.first)}, {"right", to_string(ctx, k.second)}});
    out.line(coeff_prefix(c) + to_string(ctx, k.first) + " (x) " + to_string(ctx, k.second));
  }
  out.doc()["terms"] = terms;
}

int run_comult(const Config& cfg, const Query& q, Output& out) {
  emit_tensor(cfg.ctx, comult(cfg.ctx, gr(q.word)), out);
  return kExitPass;
}

int run_comod(const Config& cfg, const Query& q, Output& out) {
  emit_tensor(cfg.ctx, comod(cfg.ctx, gr(q.word)), out);
  return kExitPass;
}

int run_comodmax(const Config& cfg, const Query& q, Output& out) {
  json terms = json::array();
  for (const auto& [w, c] : comodmax(cfg.ctx, gr(q.word))) {
    terms.push_back({{"coeff", c}, {"word", to_string(cfg.ctx, w)}});
    out.line(coeff_prefix(c) + to_string(cfg.ctx, w));
  }
  out.doc()["terms"] = terms;
  return kExitPass;
}

int run_mustar(const Config& cfg, const Query& q, Output& out) {
  json terms = json::array();
  for (const auto& [k, c] : mu_star(cfg.ctx, cfg.sigma, gr(q.word))) {
    const std::string classical = to_string(cfg.ctx, cfg.sigma, k.second);
    terms.push_back({{"coeff", c}, {"gl", to_string(cfg.ctx, k.first)}, {"classical", classical}});
    out.line(coeff_prefix(c) + to_string(cfg.ctx, k.first) + " (x) " + classical);
  }
  out.doc()["terms"] = terms;
  return kExitPass;
}

int run_derive(const Config& cfg, const Query& q, Output& out) {
  if (!q.rho) throw Error(ErrorCode::SyntaxError, "derive needs --rho");
  const Multisegment& m = single_label(q);
  const PointSet points = parse_point_set(cfg.ctx, *q.rho);
  Multisegment result;
  switch (q.side) {
    case Side::Left: result = left_derivative_set(cfg.ctx, m, points); break;
    case Side::Right: result = right_derivative_set(cfg.ctx, m, points); break;
    case Side::Both: result = derivative_DAB(cfg.ctx, m, points, points); break;
  }
  out.doc()["result"] = to_string(cfg.ctx, result);
  out.line(to_string(cfg.ctx, result));
  return kExitPass;
}

int run_lnrset(const Config& cfg, const Query& q, Output& out) {
  const Multisegment& m = single_label(q);
  const std::string left = to_string(cfg.ctx, lnrset(cfg.ctx, m));
  const std::string right = to_string(cfg.ctx, rnrset(cfg.ctx, m));
  out.doc()["lnrset"] = left;
  out.doc()["rnrset"] = right;
  out.line("lnrset " + left);
  out.line("rnrset " + right);
  return kExitPass;
}

int run_jacmin(const Config& cfg, const Query& q, Output& out) {
  const Coeff gl = jacmin_length(cfg.ctx, gr(q.word));
  const Coeff classical = jacmin_length_classical(cfg.ctx, cfg.sigma, gr(q.word));
  out.doc()["gl"] = gl;
  out.doc()["classical"] = classical;
  out.line("gl " + std::to_string(gl));
  out.line("classical " + std::to_string(classical));
  return kExitPass;
}

LineId query_line(const Config& cfg, const Query& q) {
  return q.line ? cfg.ctx.id(*q.line) : LineId{0};
}

void require_bounds(const Query& q) {
  if (!q.window || !q.max_degree) {
    throw Error(ErrorCode::SyntaxError, std::string(command_name(q.command)) + " needs --window and --max-degree");
  }
}

int run_enumerate(const Config& cfg, const Query& q, Output& out) {
  require_bounds(q);
  json items = json::array();
  std::int64_t count = 0;
  for_each_multisegment(cfg.ctx, query_line(cfg, q), *q.window, *q.max_degree, [&](const Multisegment& m) {
    items.push_back(to_string(cfg.ctx, m));
    out.line(to_string(cfg.ctx, m));
    ++count;
  });
  out.doc()["count"] = count;
  out.doc()["multisegments"] = items;
  return kExitPass;
}

int run_critical(const Config& cfg, const Query& q, Output& out) {
  require_bounds(q);
  json items = json::array();
  for_each_multisegment(cfg.ctx, query_line(cfg, q), *q.window, *q.max_degree, [&](const Multisegment& m) {
    const auto type = classify_critical(cfg.ctx, cfg.sigma, m);
    if (!type) return;
    const std::string ms = to_string(cfg.ctx, m);
    const std::string pattern(pattern_name(type->pattern));
    items.push_back({{"multisegment", ms},
                     {"pattern", pattern},
                     {"alpha", to_string(cfg.ctx, type->alpha)},
                     {"k", type->k},
                     {"l", type->l}});
    out.line(ms + "  " + pattern + " alpha=" + to_string(cfg.ctx, type->alpha) + " k=" + std::to_string(type->k) +
             " l=" + std::to_string(type->l));
  });
  out.doc()["critical"] = items;
  return kExitPass;
}

int run_verify(const Config& cfg, const Query& q, const bool have_config, Output& out) {
  SuiteOptions options;
  options.window = q.window;
  options.max_degree = q.max_degree;
  options.execution = q.serial ? Execution::Serial : Execution::Parallel;
  if (have_config) options.config = cfg;
  const std::vector<std::string> names = q.suite ? std::vector<std::string>{*q.suite} : suite_names();

  bool all_passed = true;
  json reports = json::array();
  for (const auto& name : names) {
    const SuiteReport r = run_suite(name, options);
    all_passed = all_passed && r.passed();
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
    reports.push_back({{"suite", r.suite},
                       {"cases", r.cases},
                       {"passed", r.passed()},
                       {"failures", failures},
                       {"notes", r.notes},
                       {"wall_time_seconds", r.wall_time_seconds}});
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f", r.wall_time_seconds);
    out.line(std::string(r.passed() ? "PASS " : "FAIL ") + r.suite + " cases=" + std::to_string(r.cases) +
             " failures=" + std::to_string(r.failures.size()) + " notes=" + std::to_string(r.notes.size()) +
             " time=" + timing + "s");
    for (const auto& f : r.failures) out.line("  " + f.input + ": expected " + f.expected + ", got " + f.got);
  }
  out.doc()["reports"] = reports;
  out.doc()["passed"] = all_passed;
  return all_passed ? kExitPass : kExitFailure;
}

int dispatch(const Config& cfg, const Query& q, bool have_config, Output& out) {
  switch (q.command) {
    case Command::Decide: return run_decide(cfg, q, out);
    case Command::Comult: return run_comult(cfg, q, out);
    case Command::Comod: return run_comod(cfg, q, out);
    case Command::Comodmax: return run_comodmax(cfg, q, out);
    case Command::Mustar: return run_mustar(cfg, q, out);
    case Command::Derive: return run_derive(cfg, q, out);
    case Command::Lnrset: return run_lnrset(cfg, q, out);
    case Command::Jacmin: return run_jacmin(cfg, q, out);
    case Command::Critical: return run_critical(cfg, q, out);
    case Command::Verify: return run_verify(cfg, q, have_config, out);
    case Command::Enumerate: return run_enumerate(cfg, q, out);
  }
  return kExitUsage;
}

// Raw option strings as given on the command line.
struct RawOptions {
  std::string payload;
  std::string format = "text";
  std::string window;
  int max_degree = -1;
  std::string suite;
  std::string config;
  std::string rho;
  std::string side = "both";
  std::string line;
  bool serial = false;
};

Query to_query(Command command, const RawOptions& raw) {
  Query q;
  q.command = command;
  q.payload = raw.payload;
  q.format = raw.format == "json" ? OutputFormat::Json : OutputFormat::Text;
  if (!raw.window.empty()) q.window = parse_window(raw.window);
  if (raw.max_degree >= 0) q.max_degree = raw.max_degree;
  if (!raw.suite.empty()) q.suite = raw.suite;
  if (!raw.config.empty()) q.config_path = raw.config;
  if (!raw.rho.empty()) q.rho = raw.rho;
  if (!raw.line.empty()) q.line = raw.line;
  q.side = raw.side == "left" ? Side::Left : raw.side == "right" ? Side::Right : Side::Both;
  q.serial = raw.serial;
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segment and multisegment calculus for Z(m) x| sigma"};
  app.require_subcommand(1);
  RawOptions raw;

  const std::vector<std::pair<Command, std::string>> commands{
      {Command::Decide, "decide irreducibility of Z(m) x| sigma"},
      {Command::Comult, "comultiplication of a GL word"},
      {Command::Comod, "comodule map of Z(m) x| sigma"},
      {Command::Comodmax, "maximal-parabolic part of comod"},
      {Command::Mustar, "Jacquet module terms with classical labels"},
      {Command::Derive, "left, right or two-sided derivative"},
      {Command::Lnrset, "left and right non-reduced point sets"},
      {Command::Jacmin, "length of the minimal Jacquet module"},
      {Command::Critical, "classify critical multisegments in a window"},
      {Command::Verify, "run verification suites"},
      {Command::Enumerate, "list multisegments in a window"},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& [c, description] : commands) {
    auto* sub = app.add_subcommand(std::string(command_name(c)), description);
    if (command_takes_payload(c)) sub->add_option("payload", raw.payload, "multisegment or word")->required();
    sub->add_option("--config", raw.config, "JSON configuration file");
    sub->add_option("--format", raw.format)->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--window", raw.window, "index window a..b");
    sub->add_option("--max-degree", raw.max_degree)->check(CLI::NonNegativeNumber);
    sub->add_option("--suite", raw.suite);
    sub->add_option("--rho", raw.rho, "comma separated points");
    sub->add_option("--side", raw.side)->check(CLI::IsMember({"left", "right", "both"}));
    sub->add_option("--line", raw.line, "line for enumerate and critical");
    sub->add_flag("--serial", raw.serial, "run verification suites without OpenMP");
    subs.emplace_back(sub, c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Command command = Command::Decide;
  for (const auto& [sub, c] : subs) {
    if (sub->parsed()) command = c;
  }

  try {
    Query q = to_query(command, raw);
    const bool have_config = q.config_path.has_value();
    const Config cfg = have_config ? load_config(*q.config_path) : default_config();
    resolve_payload(q, cfg.ctx);
    Output out(q.format);
    const int code = dispatch(cfg, q, have_config, out);
    out.flush(std::cout);
    return code;
  } catch (const Error& e) {
    std::cerr << "segcalc: " << e.what() << "\n";
    return is_usage_error(e.code()) ? kExitUsage : kExitFailure;
  }
}

#include "support.hpp"

#include <algorithm>
#include <json.hpp>

#include "segcalc/enumerate.hpp"
#include "segcalc/error.hpp"
#include "segcalc/gl_ring.hpp"

using namespace segcalc;
using namespace segcalc::test;

namespace {

// Every count vector over the window's segments, kept when the degree fits.
std::vector<Multisegment> brute_force_enumeration(const CuspContext& ctx, Window w, int max_degree) {
  std::vector<Segment> segs;
  for (int b = w.lo; b <= w.hi; ++b) {
    for (int e = b; e <= w.hi; ++e) segs.push_back({0, b, e});
  }
  std::vector<int> counts(segs.size(), 0);
  std::vector<Multisegment> out;
  while (true) {
    Multisegment m;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      for (int c = 0; c < counts[i]; ++c) m.add(segs[i]);
    }
    if (m.degree(ctx) <= max_degree) out.push_back(m);
    std::size_t i = 0;
    while (i < counts.size() && ++counts[i] > max_degree) counts[i++] = 0;
    if (i == counts.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int syntax_column(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const SyntaxError& e) {
    return e.column();
  }
  FAIL("no syntax error raised");
  return 0;
}

}  // namespace

TEST_CASE("query parsing") {
  const auto ctx = CuspContext::self_dual_line();
  const auto q = parse_query(R"(decide "[r[0],r[2]] + [r[-1],r[0]]")", ctx);
  CHECK(q.command == Command::Decide);
  REQUIRE(q.m);
  CHECK(q.m->size() == 2);

  const auto j = parse_query(R"(jacmin "[r[0],r[0]]" --format json)", ctx);
  CHECK(j.command == Command::Jacmin);
  CHECK(j.format == OutputFormat::Json);
  REQUIRE(j.m);
  CHECK(j.m->size() == 1);

  const auto v = parse_query("verify --suite ladder-lnrset --window -2..3 --max-degree 4 --serial", ctx);
  CHECK(v.command == Command::Verify);
  CHECK(v.suite == "ladder-lnrset");
  CHECK(v.window == Window{-2, 3});
  CHECK(v.max_degree == 4);
  CHECK(v.serial);

  const auto d = parse_query(R"(derive "[r[0],r[2]]" --rho "r[0],r[1]" --side left)", ctx);
  CHECK(d.side == Side::Left);
  CHECK(parse_point_set(ctx, *d.rho) == PointSet{{0, 0}, {0, 1}});
}

TEST_CASE("query errors") {
  const auto ctx = CuspContext::self_dual_line();
  CHECK_THROWS_AS(parse_query(R"(decide "[r[2],r[0]]")", ctx), SyntaxError);
  CHECK_THROWS_AS(parse_query("decide", ctx), SyntaxError);
  CHECK_THROWS_AS(parse_query("frobnicate", ctx), SyntaxError);
  CHECK_THROWS_AS(parse_query("verify --window 3..1", ctx), SyntaxError);
  CHECK_THROWS_AS(parse_query("critical extra", ctx), SyntaxError);
  try {
    parse_query(R"(decide "[x[0],x[1]]")", ctx);
    FAIL("expected UnknownLine");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownLine);
  }
}

TEST_CASE("syntax errors carry a position") {
  const auto ctx = CuspContext::self_dual_line();
  CHECK(syntax_column([&] { parse_multisegment(ctx, "[r[0],r[1]] + [r[0] r[1]]"); }) == 21);
  CHECK(syntax_column([&] { parse_multisegment(ctx, "[r[0],r[1]] +"); }) == 14);
}

TEST_CASE("printing a parse gives the canonical text") {
  const auto pq = paired_context();
  const std::vector<std::pair<std::string, std::string>> cases{
      {"[r[0],r[2]]+[r[-1],r[0]]", "[r[-1],r[0]] + [r[0],r[2]]"},
      {" [q[1] , q[1]] + [p[-2],p[0]] ", "[p[-2],p[0]] + [q[1],q[1]]"},
      {"0", "0"},
  };
  for (const auto& [in, canonical] : cases) {
    CHECK(to_string(pq, parse_multisegment(pq, in)) == canonical);
    CHECK(to_string(pq, parse_multisegment(pq, canonical)) == canonical);
  }
  CHECK(to_string(pq, parse_word(pq, "Z([r[1],r[1]]) * [r[0],r[0]]")) == "Z([r[0],r[0]]) x Z([r[1],r[1]])");
  CHECK(to_string(pq, parse_word(pq, "1")) == "1");
  for (const auto& m : enumerate_multisegments(pq, pq.id("r"), {-2, 2}, 4)) {
    CHECK(parse_multisegment(pq, to_string(pq, m)) == m);
  }
}

TEST_CASE("enumeration examples") {
  const auto ctx = CuspContext::self_dual_line();
  CHECK(enumerate_multisegments(ctx, 0, {0, 0}, 2).size() == 3);
  CHECK(enumerate_multisegments(ctx, 0, {0, 1}, 1) ==
        std::vector<Multisegment>{Multisegment{}, ms(ctx, "[r[0],r[0]]"), ms(ctx, "[r[1],r[1]]")});
  CHECK(enumerate_multisegments(ctx, 0, {-3, 3}, 0) == std::vector<Multisegment>{Multisegment{}});
}

TEST_CASE("enumeration is complete, duplicate free and ordered") {
  const auto ctx = CuspContext::self_dual_line();
  for (const auto& [w, d] : std::vector<std::pair<Window, int>>{{{0, 2}, 3}, {{-1, 1}, 4}, {{-2, 1}, 3}}) {
    const auto got = enumerate_multisegments(ctx, 0, w, d);
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
    CHECK(got == brute_force_enumeration(ctx, w, d));
  }
}

TEST_CASE("ladder enumeration") {
  const auto ladders = enumerate_ladders(0, {-2, 2}, 3);
  for (const auto& m : ladders) {
    CHECK(is_ladder(m));
    CHECK(m.size() <= 3);
  }
  const auto ctx = CuspContext::self_dual_line();
  std::size_t expected = 0;
  for (const auto& m : enumerate_multisegments(ctx, 0, {-2, 2}, 15)) {
    if (is_ladder(m) && m.size() <= 3) ++expected;
  }
  CHECK(ladders.size() == expected);
}

TEST_CASE("configuration files") {
  const std::string text = R"({
    "lines": [ { "name": "r", "deg": 1, "tilde": {"kind":"self_dual","t0":0}, "expo0": "0" },
               { "name": "p", "deg": 2, "tilde": {"kind":"paired","partner":"q","c":0}, "expo0": "0" },
               { "name": "q", "deg": 2, "tilde": {"kind":"paired","partner":"p","c":0}, "expo0": "0" } ],
    "sigma": { "cuspred": [ {"line":"r","index":1} ] } })";
  const Config cfg = parse_config(text);
  CHECK(cfg.ctx.size() == 3);
  CHECK(cfg.sigma.cuspred == std::set<CuspPoint>{{cfg.ctx.id("r"), -1}, {cfg.ctx.id("r"), 1}});
  CHECK(cfg.ctx.deg(cfg.ctx.id("p")) == 2);

  const std::string once = config_to_json(cfg);
  CHECK(config_to_json(parse_config(once)) == once);
  const auto reparsed = nlohmann::json::parse(once);
  CHECK(reparsed.dump() == once);

  const std::string half = R"({"lines":[{"name":"s","deg":1,"tilde":{"kind":"self_dual","t0":-1},"expo0":"1/2"}]})";
  CHECK(parse_config(half).ctx.line(0).expo0 == Rational(1, 2));
}

TEST_CASE("configuration errors") {
  auto code_of = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::SyntaxError;
  };
  CHECK(code_of("{") == ErrorCode::ConfigError);
  CHECK(code_of(R"({"lines":[]})") == ErrorCode::ConfigError);
  CHECK(code_of(R"({"lines":[{"name":"r","deg":1,"tilde":{"kind":"odd"},"expo0":"0"}]})") == ErrorCode::ConfigError);
  CHECK(code_of(R"({"lines":[{"name":"r","deg":1,"tilde":{"kind":"self_dual","t0":0},"expo0":"1"}]})") ==
        ErrorCode::BadExponentOffset);
  CHECK(code_of(R"({"lines":[{"name":"r","deg":1,"tilde":{"kind":"self_dual","t0":0},"expo0":"0"}],
                   "sigma":{"cuspred":[{"line":"r","index":1},{"line":"r","index":2}]}})") ==
        ErrorCode::MultipleReducibilityOrbits);
  CHECK(code_of(R"({"lines":[{"name":"r","deg":1,"tilde":{"kind":"self_dual","t0":0},"expo0":"0"}],
                   "sigma":{"cuspred":[{"line":"x","index":1}]}})") == ErrorCode::UnknownLine);
}

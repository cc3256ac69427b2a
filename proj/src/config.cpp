#include "segcalc/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "segcalc/error.hpp"

namespace segcalc {
namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorCode::ConfigError, where + ": missing \"" + key + "\"");
  }
  return obj.at(key);
}

int int_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer()) throw Error(ErrorCode::ConfigError, where + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) throw Error(ErrorCode::ConfigError, where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

CuspLine parse_line(const json& j, std::size_t n) {
  const std::string where = "lines[" + std::to_string(n) + "]";
  CuspLine line;
  line.name = string_field(j, "name", where);
  line.deg = int_field(j, "deg", where);
  const json& tilde = field(j, "tilde", where);
  const std::string kind = string_field(tilde, "kind", where + ".tilde");
  if (kind == "self_dual") {
    line.tilde = SelfDual{int_field(tilde, "t0", where + ".tilde")};
  } else if (kind == "paired") {
    line.tilde = Paired{string_field(tilde, "partner", where + ".tilde"), int_field(tilde, "c", where + ".tilde")};
  } else {
    throw Error(ErrorCode::ConfigError, where + ".tilde: unknown kind \"" + kind + "\"");
  }
  const json& expo0 = field(j, "expo0", where);
  if (expo0.is_string()) {
    line.expo0 = parse_rational(expo0.get<std::string>());
  } else if (expo0.is_number_integer()) {
    line.expo0 = Rational(expo0.get<std::int64_t>());
  } else {
    throw Error(ErrorCode::ConfigError, where + ": \"expo0\" must be a string");
  }
  return line;
}

}  // namespace

Config default_config() { return {CuspContext::self_dual_line("r", 0), SigmaContext{}}; }

Config parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ConfigError, std::string("invalid JSON: ") + e.what());
  }
  const json& lines = field(root, "lines", "config");
  if (!lines.is_array() || lines.empty()) throw Error(ErrorCode::ConfigError, "\"lines\" must be a nonempty array");
  std::vector<CuspLine> parsed;
  for (std::size_t i = 0; i < lines.size(); ++i) parsed.push_back(parse_line(lines[i], i));
  CuspContext ctx(std::move(parsed));

  std::vector<CuspPoint> reps;
  std::string name = "sigma";
  if (root.contains("sigma")) {
    const json& sigma = root.at("sigma");
    if (sigma.contains("name")) name = string_field(sigma, "name", "sigma");
    if (sigma.contains("cuspred")) {
      const json& pts = sigma.at("cuspred");
      if (!pts.is_array()) throw Error(ErrorCode::ConfigError, "sigma.cuspred must be an array");
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string where = "sigma.cuspred[" + std::to_string(i) + "]";
        reps.push_back(ctx.point(string_field(pts[i], "line", where), int_field(pts[i], "index", where)));
      }
    }
  }
  SigmaContext sigma = make_sigma(ctx, reps, name);
  return {std::move(ctx), std::move(sigma)};
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const Config& cfg) {
  json lines = json::array();
  for (const auto& l : cfg.ctx.lines()) {
    json tilde;
    if (const auto* sd = std::get_if<SelfDual>(&l.tilde)) {
      tilde = {{"kind", "self_dual"}, {"t0", sd->t0}};
    } else {
      const auto& p = std::get<Paired>(l.tilde);
      tilde = {{"kind", "paired"}, {"partner", p.partner}, {"c", p.c}};
    }
    lines.push_back({{"name", l.name}, {"deg", l.deg}, {"tilde", tilde}, {"expo0", to_string(l.expo0)}});
  }
  json pts = json::array();
  for (const auto& p : cfg.sigma.cuspred) pts.push_back({{"line", cfg.ctx.name(p.line)}, {"index", p.index}});
  return json{{"lines", lines}, {"sigma", {{"name", cfg.sigma.name}, {"cuspred", pts}}}}.dump();
}

}  // namespace segcalc

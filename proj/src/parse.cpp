#include "segcalc/parse.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "segcalc/error.hpp"

namespace segcalc {
namespace {

class Parser {
 public:
  Parser(const CuspContext& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  [[noreturn]] void fail(std::size_t at, const std::string& what) const {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(line, col, what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      fail(pos_, std::string("expected '") + c + "'" + (pos_ < text_.size() ? std::string(", found '") + text_[pos_] + "'" : ", found end of input"));
    }
    ++pos_;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect_end() {
    if (!at_end()) fail(pos_, std::string("unexpected '") + text_[pos_] + "'");
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) fail(start, "expected a line name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) fail(start, "expected an integer");
    return value;
  }

  CuspPoint point() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string name = identifier();
    const auto line = ctx_.find(name);
    if (!line) {
      throw Error(ErrorCode::UnknownLine, "no line named '" + name + "' (at column " + std::to_string(start + 1) + ")");
    }
    expect('[');
    const int index = integer();
    expect(']');
    return {*line, index};
  }

  Segment segment() {
    skip_ws();
    const std::size_t start = pos_;
    expect('[');
    const CuspPoint b = point();
    expect(',');
    const CuspPoint e = point();
    expect(']');
    if (b.line != e.line) fail(start, "segment endpoints lie on different lines");
    if (e.index < b.index) fail(start, "segment end precedes its beginning");
    return {b.line, b.index, e.index};
  }

  Multisegment multisegment() {
    if (peek() == '0') {
      ++pos_;
      return {};
    }
    std::vector<Segment> segs{segment()};
    while (accept('+')) segs.push_back(segment());
    return Multisegment(std::move(segs));
  }

  Word factor() {
    skip_ws();
    if (peek() == '1') {
      ++pos_;
      return Word::unit();
    }
    if (peek() == 'Z' && pos_ + 1 < text_.size()) {
      // 'Z(' opens a label; otherwise Z is a line name inside a bare mseg.
      std::size_t look = pos_ + 1;
      while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
      if (look < text_.size() && text_[look] == '(') {
        pos_ = look + 1;
        Multisegment m = multisegment();
        expect(')');
        return Word::z(m);
      }
    }
    return Word::z(multisegment());
  }

  Word word() {
    Word w = factor();
    while (accept('*')) w = w * factor();
    return w;
  }

  std::size_t pos() const { return pos_; }

 private:
  const CuspContext& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class T, class Fn>
T parse_all(const CuspContext& ctx, std::string_view text, Fn fn) {
  Parser p(ctx, text);
  T value = fn(p);
  p.expect_end();
  return value;
}

// Shell-like split honouring double quotes.
std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::string tok;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      if (text[i] == '"') {
        const std::size_t close = text.find('"', i + 1);
        if (close == std::string_view::npos) throw SyntaxError(1, static_cast<int>(i) + 1, "unterminated quote");
        tok.append(text.substr(i + 1, close - i - 1));
        i = close + 1;
      } else {
        tok.push_back(text[i++]);
      }
    }
    (void)start;
    out.push_back(std::move(tok));
  }
  return out;
}

constexpr std::pair<Command, std::string_view> kCommands[] = {
    {Command::Decide, "decide"},     {Command::Comult, "comult"},     {Command::Comod, "comod"},
    {Command::Comodmax, "comodmax"}, {Command::Mustar, "mustar"},     {Command::Derive, "derive"},
    {Command::Lnrset, "lnrset"},     {Command::Jacmin, "jacmin"},     {Command::Critical, "critical"},
    {Command::Verify, "verify"},     {Command::Enumerate, "enumerate"},
};

}  // namespace

CuspPoint parse_point(const CuspContext& ctx, std::string_view text) {
  return parse_all<CuspPoint>(ctx, text, [](Parser& p) { return p.point(); });
}

Segment parse_segment(const CuspContext& ctx, std::string_view text) {
  return parse_all<Segment>(ctx, text, [](Parser& p) { return p.segment(); });
}

Multisegment parse_multisegment(const CuspContext& ctx, std::string_view text) {
  return parse_all<Multisegment>(ctx, text, [](Parser& p) { return p.multisegment(); });
}

Word parse_word(const CuspContext& ctx, std::string_view text) {
  return parse_all<Word>(ctx, text, [](Parser& p) { return p.word(); });
}

PointSet parse_point_set(const CuspContext& ctx, std::string_view text) {
  return parse_all<PointSet>(ctx, text, [](Parser& p) {
    PointSet out{p.point()};
    while (p.accept(',')) out.insert(p.point());
    return out;
  });
}

Window parse_window(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw SyntaxError(1, 1, "window must look like a..b");
  auto number = [&](std::string_view s, std::size_t offset) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw SyntaxError(1, static_cast<int>(offset) + 1, "window bound is not an integer");
    }
    return v;
  };
  Window w{number(text.substr(0, dots), 0), number(text.substr(dots + 2), dots + 2)};
  if (w.hi < w.lo) throw SyntaxError(1, 1, "window upper bound is below the lower bound");
  return w;
}

std::string_view command_name(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "?";
}

std::optional<Command> command_from_name(std::string_view name) {
  for (const auto& [cmd, n] : kCommands) {
    if (n == name) return cmd;
  }
  return std::nullopt;
}

bool command_takes_payload(Command c) {
  return c != Command::Critical && c != Command::Verify && c != Command::Enumerate;
}

Query parse_query(std::string_view text, const CuspContext& ctx) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw SyntaxError(1, 1, "empty query");
  const auto command = command_from_name(tokens[0]);
  if (!command) throw SyntaxError(1, 1, "unknown command '" + tokens[0] + "'");

  Query q;
  q.command = *command;
  bool have_payload = false;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    if (tok.rfind("--", 0) != 0) {
      if (have_payload || !command_takes_payload(q.command)) {
        throw SyntaxError(1, 1, "unexpected argument '" + tok + "'");
      }
      q.payload = tok;
      have_payload = true;
      continue;
    }
    if (tok == "--serial") {
      q.serial = true;
      continue;
    }
    if (i + 1 >= tokens.size()) throw SyntaxError(1, 1, "option " + tok + " needs a value");
    const std::string& value = tokens[++i];
    if (tok == "--format") {
      if (value == "text") {
        q.format = OutputFormat::Text;
      } else if (value == "json") {
        q.format = OutputFormat::Json;
      } else {
        throw SyntaxError(1, 1, "format must be text or json");
      }
    } else if (tok == "--window") {
      q.window = parse_window(value);
    } else if (tok == "--max-degree") {
      int d = -1;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), d);
      if (ec != std::errc{} || ptr != value.data() + value.size() || d < 0) {
        throw SyntaxError(1, 1, "max-degree must be a nonnegative integer");
      }
      q.max_degree = d;
    } else if (tok == "--suite") {
      q.suite = value;
    } else if (tok == "--config") {
      q.config_path = value;
    } else if (tok == "--line") {
      q.line = value;
    } else if (tok == "--rho") {
      q.rho = value;
    } else if (tok == "--side") {
      if (value == "left") {
        q.side = Side::Left;
      } else if (value == "right") {
        q.side = Side::Right;
      } else if (value == "both") {
        q.side = Side::Both;
      } else {
        throw SyntaxError(1, 1, "side must be left, right or both");
      }
    } else {
      throw SyntaxError(1, 1, "unknown option " + tok);
    }
  }

  if (command_takes_payload(q.command) && !have_payload) {
    throw SyntaxError(1, 1, std::string(command_name(q.command)) + " needs a payload");
  }
  resolve_payload(q, ctx);
  return q;
}

void resolve_payload(Query& q, const CuspContext& ctx) {
  if (!command_takes_payload(q.command)) return;
  q.word = parse_word(ctx, q.payload);
  q.m.reset();
  if (q.word.is_unit()) {
    q.m = Multisegment{};
  } else if (q.word.factors().size() == 1) {
    q.m = q.word.factors().front().m;
  }
}

}  // namespace segcalc

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "segcalc/derivative.hpp"
#include "segcalc/gl_ring.hpp"

namespace segcalc {

// Grammar:
//   point := IDENT '[' INT ']'
//   seg   := '[' point ',' point ']'
//   mseg  := seg ('+' seg)* | '0'
//   word  := factor ('*' factor)*
//   factor:= 'Z(' mseg ')' | '1' | mseg
// Errors are SyntaxError with 1-based line/column, or UnknownLine.
CuspPoint parse_point(const CuspContext& ctx, std::string_view text);
Segment parse_segment(const CuspContext& ctx, std::string_view text);
Multisegment parse_multisegment(const CuspContext& ctx, std::string_view text);
Word parse_word(const CuspContext& ctx, std::string_view text);
// Comma separated points, e.g. "r[0],r[1]".
PointSet parse_point_set(const CuspContext& ctx, std::string_view text);

struct Window {
  int lo = 0;
  int hi = 0;
  bool operator==(const Window&) const = default;
};

// "a..b" with a <= b.
Window parse_window(std::string_view text);

enum class Command { Decide, Comult, Comod, Comodmax, Mustar, Derive, Lnrset, Jacmin, Critical, Verify, Enumerate };
enum class OutputFormat { Text, Json };
enum class Side { Left, Right, Both };

std::string_view command_name(Command c);
std::optional<Command> command_from_name(std::string_view name);

struct Query {
  Command command = Command::Decide;
  std::string payload;
  Word word;                       // payload as a product of labels
  std::optional<Multisegment> m;  // payload when it is a single Z(m)
  OutputFormat format = OutputFormat::Text;
  std::optional<Window> window;
  std::optional<int> max_degree;
  std::optional<std::string> suite;
  std::optional<std::string> config_path;
  std::optional<std::string> rho;
  std::optional<std::string> line;
  Side side = Side::Both;
  bool serial = false;
};

bool command_takes_payload(Command c);

// Parses a whole command line such as
//   decide "[r[0],r[2]] + [r[-1],r[0]]" --format json
// The payload is parsed against `ctx`.
Query parse_query(std::string_view text, const CuspContext& ctx);

// Fills q.word and q.m from q.payload for commands that take one.
void resolve_payload(Query& q, const CuspContext& ctx);

}  // namespace segcalc

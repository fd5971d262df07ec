#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gainbalance/cyclespace.hpp"
#include "gainbalance/gaingraph.hpp"
#include "gainbalance/graph.hpp"

namespace gainbalance {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// `vertex <name>` and `edge <id> <tail> <head>` lines; '#' starts a comment.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

/// A `group ...` header, then `gain <edge-id> <element>` lines.
GainAssignment parse_gains(std::string_view text, const Graph& g);
std::string format_gains(const Graph& g, const GainAssignment& a);

/// Signed edge ids ("e3 -e7 e3"); the walk starts at the source of its first step.
ClosedWalk parse_walk(const Graph& g, std::string_view text);

struct ParsedBasis {
  std::vector<BinaryCycle> members;
  std::vector<std::optional<ClosedWalk>> walks;

  bool fully_oriented() const;
  /// Attached walks, or canonical circle walks for members without one.
  OrientedBasis oriented(const Graph& g) const;
};

/// One member per line as edge ids; a following `walk:` line attaches an
/// orientation to the member above it.
ParsedBasis parse_basis(std::string_view text, const Graph& g);
std::string format_basis(const Graph& g, const OrientedBasis& b);

std::string read_text_file(const std::string& path);
/// Named tags (W4, 2C4, K4dd, ...) first, then a graph file; "file:" prefix forces a file.
Graph load_graph(const std::string& spec);

}  // namespace gainbalance

#pragma once

// The small DOT subset written by the command-line tool, and a reader for it.
//
//   graph  := "digraph" ID "{" stmt* "}"
//   stmt   := ID attrs? ";"            node
//           | ID "->" ID attrs? ";"    edge
//   attrs  := "[" ID "=" ID ("," ID "=" ID)* "]"
//   ID     := '"' (any char except '"' and newline, or '\"' / '\\' / '\n')* '"'
//           | [A-Za-z0-9_.-]+
//
// Whitespace (including newlines) separates tokens; "//" starts a comment
// running to the end of the line.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coxar::dot {

using Attributes = std::map<std::string, std::string>;

struct Node {
  std::string id;
  Attributes attributes;
  bool operator==(const Node&) const = default;
};

struct Edge {
  std::string from;
  std::string to;
  Attributes attributes;
  bool operator==(const Edge&) const = default;
};

struct Graph {
  std::string name;
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  bool operator==(const Graph&) const = default;
};

/// Raised by parse(); line and column are 1-based.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Nodes first, then edges, one statement per line; every ID is quoted.
std::string write(const Graph& graph);

/// Reads the grammar above. Edges may only mention declared nodes.
Graph parse(std::string_view text);

}  // namespace coxar::dot

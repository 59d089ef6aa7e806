#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "pseudograph/graph.hpp"

namespace pseudograph {

/// Malformed edge-list or DOT input. `line`/`column` are 1-based; 0 when
/// the problem is not tied to a position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line_, column_;
};

/// "n m" header, then one "u v" line per edge with u <= v, canonical order.
void write_edge_list(std::ostream& os, const Graph& g);
std::string to_edge_list(const Graph& g);

/// Strict reader: checks token shape, vertex range, u <= v, duplicates and
/// the declared edge count, in that order per line.
Graph read_edge_list(std::istream& is);
Graph parse_edge_list(const std::string& text);
Graph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Graph& g);

/// Undirected DOT; every vertex listed so isolated vertices survive.
void write_dot(std::ostream& os, const Graph& g, const std::string& name = "G");
std::string to_dot(const Graph& g, const std::string& name = "G");
/// Reads the subset of DOT produced by write_dot.
Graph parse_dot(const std::string& text);

}  // namespace pseudograph

#include "pseudograph/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <regex>
#include <set>
#include <sstream>

namespace pseudograph {

std::string ParseError::format(const std::string& what, std::size_t line, std::size_t column) {
  if (line == 0) return what;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
}

void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

namespace {

struct Token {
  std::uint64_t value;
  std::size_t column;
};

// Splits a line into non-negative integers; reports the column of any junk.
std::vector<Token> tokens(const std::string& line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(line[i])))
      throw ParseError("expected a non-negative integer", lineno, i + 1);
    const std::size_t start = i;
    std::uint64_t v = 0;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
      if (v > (UINT64_MAX - 9) / 10) throw ParseError("integer too large", lineno, start + 1);
      v = v * 10 + static_cast<std::uint64_t>(line[i] - '0');
      ++i;
    }
    out.push_back({v, start + 1});
  }
  return out;
}

}  // namespace

Graph read_edge_list(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<Token> head;
  while (std::getline(is, line)) {
    ++lineno;
    head = tokens(line, lineno);
    if (!head.empty()) break;
  }
  if (head.empty()) throw ParseError("missing \"n m\" header", lineno ? lineno : 1, 1);
  if (head.size() != 2) throw ParseError("header must be \"n m\"", lineno, head.size() > 2 ? head[2].column : 1);
  const std::uint64_t n = head[0].value, m = head[1].value;
  if (n > UINT32_MAX) throw ParseError("vertex count too large", lineno, head[0].column);

  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(is, line)) {
    ++lineno;
    auto t = tokens(line, lineno);
    if (t.empty()) continue;
    if (t.size() != 2)
      throw ParseError("edge line must be \"u v\"", lineno, t.size() > 2 ? t[2].column : line.size() + 1);
    if (t[0].value >= n) throw ParseError("vertex " + std::to_string(t[0].value) + " out of range [0," + std::to_string(n) + ")", lineno, t[0].column);
    if (t[1].value >= n) throw ParseError("vertex " + std::to_string(t[1].value) + " out of range [0," + std::to_string(n) + ")", lineno, t[1].column);
    if (t[0].value > t[1].value) throw ParseError("endpoints must satisfy u <= v", lineno, t[0].column);
    const Edge e{static_cast<Vertex>(t[0].value), static_cast<Vertex>(t[1].value)};
    if (!seen.insert(e).second)
      throw ParseError("duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second), lineno, t[0].column);
    edges.push_back(e);
  }
  if (edges.size() != m)
    throw ParseError("header declares " + std::to_string(m) + " edges but " + std::to_string(edges.size()) + " were given", 1,
                     head[1].column);
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  return read_edge_list(is);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path + ": file not found or unreadable");
  return read_edge_list(in);
}

void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_edge_list(out, g);
}

void write_dot(std::ostream& os, const Graph& g, const std::string& name) {
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  write_dot(os, g, name);
  return os.str();
}

Graph parse_dot(const std::string& text) {
  static const std::regex node_re(R"(^\s*(\d+)\s*;?\s*$)");
  static const std::regex edge_re(R"(^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$)");
  static const std::regex open_re(R"(^\s*(strict\s+)?graph\s*[A-Za-z0-9_"]*\s*\{\s*$)");
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0, n = 0;
  bool opened = false, closed = false;
  std::vector<Edge> edges;
  std::smatch mt;
  while (std::getline(is, line)) {
    ++lineno;
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    if (!opened) {
      if (!std::regex_match(line, open_re)) throw ParseError("expected \"graph NAME {\"", lineno, 1);
      opened = true;
    } else if (line.find('}') != std::string::npos) {
      closed = true;
      break;
    } else if (std::regex_match(line, mt, edge_re)) {
      Vertex u = static_cast<Vertex>(std::stoul(mt[1])), v = static_cast<Vertex>(std::stoul(mt[2]));
      if (u > v) std::swap(u, v);
      edges.emplace_back(u, v);
      n = std::max<std::size_t>(n, std::size_t{v} + 1);
    } else if (std::regex_match(line, mt, node_re)) {
      n = std::max<std::size_t>(n, std::stoul(mt[1]) + 1);
    } else {
      throw ParseError("unsupported DOT statement", lineno, 1);
    }
  }
  if (!closed) throw ParseError("missing closing brace", lineno, 1);
  return Graph::from_edge_list(n, edges);
}

}  // namespace pseudograph

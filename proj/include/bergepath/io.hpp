#pragma once

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bergepath/error.hpp"
#include "bergepath/graph.hpp"
#include "bergepath/hypergraph.hpp"

namespace bergepath {

inline constexpr std::string_view kHypergraphMagic = "berge-hgraph v1";
inline constexpr std::string_view kGraphMagic = "berge-graph v1";

inline std::string to_text(const Hypergraph& h) {
  std::ostringstream out;
  out << kHypergraphMagic << "\nr=" << h.r() << " n=" << h.n() << "\n";
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << "\n";
  }
  return out.str();
}

inline std::string to_text(const Graph& g) {
  std::ostringstream out;
  out << kGraphMagic << "\nn=" << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

/// Red and blue edges are interleaved in lexicographic pair order.
inline std::string to_text(const RedBlueGraph& g) {
  std::ostringstream out;
  out << kGraphMagic << "\nn=" << g.n() << "\n";
  for (auto [u, v] : g.underlying().edges())
    out << u << " " << v << " " << (g.red().adjacent(u, v) ? "red" : "blue") << "\n";
  return out.str();
}

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next line that is neither blank nor a comment.
  bool next(std::string_view& line) {
    while (pos_ < text_.size()) {
      auto end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      if (!line.empty() && line.back() == '\r')
        fail("CR line endings are not accepted");
      auto first = line.find_first_not_of(" \t");
      if (first == std::string_view::npos) continue;
      if (line[first] == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw error(errc::parse_error, "line " + std::to_string(line_no_) + ": " + msg);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long long parse_int(const LineReader& in, std::string_view tok) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
    in.fail("expected a nonnegative integer, got '" + std::string(tok) + "'");
  return value;
}

inline long long parse_field(const LineReader& in, std::string_view tok, std::string_view key) {
  if (tok.size() <= key.size() + 1 || tok.substr(0, key.size()) != key || tok[key.size()] != '=')
    in.fail("expected '" + std::string(key) + "=<value>', got '" + std::string(tok) + "'");
  return parse_int(in, tok.substr(key.size() + 1));
}

}  // namespace detail

inline Hypergraph parse_hypergraph(std::string_view text) {
  detail::LineReader in(text);
  std::string_view line;
  if (!in.next(line) || line != kHypergraphMagic) in.fail("missing header '" + std::string(kHypergraphMagic) + "'");
  if (!in.next(line)) in.fail("missing 'r=<r> n=<n>' line");
  auto head = detail::split_ws(line);
  if (head.size() != 2) in.fail("expected 'r=<r> n=<n>'");
  const long long r = detail::parse_field(in, head[0], "r");
  const long long n = detail::parse_field(in, head[1], "n");
  if (r < 2) in.fail("r must be at least 2");

  std::vector<Hyperedge> edges;
  std::set<Hyperedge> seen;
  while (in.next(line)) {
    auto toks = detail::split_ws(line);
    if (static_cast<long long>(toks.size()) != r) in.fail("expected " + std::to_string(r) + " vertices");
    std::vector<VertexId> vs;
    for (auto tok : toks) {
      long long v = detail::parse_int(in, tok);
      if (v >= n) in.fail("vertex " + std::to_string(v) + " is not below n = " + std::to_string(n));
      if (!vs.empty() && v <= static_cast<long long>(vs.back())) in.fail("vertices must be strictly increasing");
      vs.push_back(static_cast<VertexId>(v));
    }
    Hyperedge e(std::move(vs));
    if (!seen.insert(e).second) in.fail("duplicate hyperedge " + to_string(e));
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<int>(n), static_cast<int>(r), std::move(edges));
}

/// A graph file is a plain Graph when no line carries a color column and a
/// RedBlueGraph when every line does.
using AnyGraph = std::variant<Graph, RedBlueGraph>;

inline AnyGraph parse_graph(std::string_view text) {
  detail::LineReader in(text);
  std::string_view line;
  if (!in.next(line) || line != kGraphMagic) in.fail("missing header '" + std::string(kGraphMagic) + "'");
  if (!in.next(line)) in.fail("missing 'n=<n>' line");
  auto head = detail::split_ws(line);
  if (head.size() != 1) in.fail("expected 'n=<n>'");
  const long long n = detail::parse_field(in, head[0], "n");

  std::vector<GraphEdge> red, blue, plain;
  std::set<GraphEdge> seen;
  int colored = -1;
  while (in.next(line)) {
    auto toks = detail::split_ws(line);
    if (toks.size() != 2 && toks.size() != 3) in.fail("expected 'u v' or 'u v <color>'");
    const int has_color = toks.size() == 3 ? 1 : 0;
    if (colored >= 0 && colored != has_color) in.fail("colored and uncolored edge lines are mixed");
    colored = has_color;
    long long u = detail::parse_int(in, toks[0]);
    long long v = detail::parse_int(in, toks[1]);
    if (u >= n || v >= n) in.fail("vertex is not below n = " + std::to_string(n));
    if (u == v) in.fail("loops are not allowed");
    GraphEdge e{static_cast<VertexId>(std::min(u, v)), static_cast<VertexId>(std::max(u, v))};
    if (!seen.insert(e).second) in.fail("duplicate edge");
    if (!has_color) {
      plain.push_back(e);
    } else if (toks[2] == "red") {
      red.push_back(e);
    } else if (toks[2] == "blue") {
      blue.push_back(e);
    } else {
      in.fail("color must be 'red' or 'blue', got '" + std::string(toks[2]) + "'");
    }
  }
  if (colored == 1) return RedBlueGraph(static_cast<int>(n), std::move(red), std::move(blue));
  return Graph(static_cast<int>(n), std::move(plain));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::invalid_input, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::invalid_input, "cannot write '" + path + "'");
  out << text;
}

}  // namespace bergepath

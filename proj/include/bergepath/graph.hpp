#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "bergepath/arith.hpp"
#include "bergepath/error.hpp"
#include "bergepath/hypergraph.hpp"

namespace bergepath {

using GraphEdge = std::pair<VertexId, VertexId>;

/// Simple undirected graph on {0, ..., n-1}; edges are stored as (min, max)
/// pairs in lexicographic order.
class Graph {
 public:
  explicit Graph(int n = 0, std::vector<GraphEdge> edges = {}) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw error(errc::invalid_parameter, "vertex count must be nonnegative");
    for (auto& [u, v] : edges_) {
      if (u == v) throw error(errc::invalid_input, "loop at vertex " + std::to_string(u));
      if (static_cast<int>(std::max(u, v)) >= n)
        throw error(errc::invalid_vertex, "edge endpoint exceeds n = " + std::to_string(n));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw error(errc::invalid_input, "duplicate edge");
    neighbors_.resize(static_cast<std::size_t>(n));
    adjacent_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges_) {
      neighbors_[u].push_back(v);
      neighbors_[v].push_back(u);
      adjacent_[index(u, v)] = adjacent_[index(v, u)] = 1;
    }
    for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
  }

  int n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return neighbors_[v]; }
  bool adjacent(VertexId u, VertexId v) const { return adjacent_[index(u, v)] != 0; }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  std::size_t index(VertexId u, VertexId v) const { return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + v; }

  int n_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::vector<char> adjacent_;
};

inline Graph complete_graph_on(int n, std::span<const VertexId> vertices, std::vector<GraphEdge> extra = {}) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) extra.emplace_back(vertices[i], vertices[j]);
  return Graph(n, std::move(extra));
}

/// Graph whose edges are colored red or blue.
class RedBlueGraph {
 public:
  RedBlueGraph(int n = 0, std::vector<GraphEdge> red = {}, std::vector<GraphEdge> blue = {})
      : red_(n, std::move(red)), blue_(n, std::move(blue)) {
    std::vector<GraphEdge> all = red_.edges();
    all.insert(all.end(), blue_.edges().begin(), blue_.edges().end());
    // Graph's constructor rejects a pair that is both red and blue.
    try {
      underlying_ = Graph(n, std::move(all));
    } catch (const error& e) {
      if (e.code() == errc::invalid_input)
        throw error(errc::invalid_input, "an edge is colored both red and blue");
      throw;
    }
  }

  int n() const { return underlying_.n(); }
  const Graph& red() const { return red_; }
  const Graph& blue() const { return blue_; }
  const Graph& underlying() const { return underlying_; }

  bool operator==(const RedBlueGraph& o) const { return red_ == o.red_ && blue_ == o.blue_; }

 private:
  Graph red_;
  Graph blue_;
  Graph underlying_;
};

namespace detail {

inline Count count_cliques_from(const Graph& g, std::vector<VertexId>& candidates, int remaining) {
  if (remaining == 0) return 1;
  if (static_cast<int>(candidates.size()) < remaining) return 0;
  if (remaining == 1) return candidates.size();
  Count total = 0;
  std::vector<VertexId> next;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    next.clear();
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (g.adjacent(candidates[i], candidates[j])) next.push_back(candidates[j]);
    total = checked_add(total, count_cliques_from(g, next, remaining - 1));
  }
  return total;
}

}  // namespace detail

/// Number of r-vertex cliques, by forward-neighborhood recursion.
inline Count count_cliques(const Graph& g, int r) {
  if (r < 2) throw error(errc::invalid_parameter, "clique order must be at least 2");
  Count total = 0;
  std::vector<VertexId> cands;
  for (VertexId v = 0; v < static_cast<VertexId>(g.n()); ++v) {
    cands.clear();
    for (VertexId w : g.neighbors(v))
      if (w > v) cands.push_back(w);
    total = checked_add(total, detail::count_cliques_from(g, cands, r - 1));
  }
  return total;
}

namespace detail {

class LongestPathSearch {
 public:
  explicit LongestPathSearch(const Graph& g) : g_(g), visited_(static_cast<std::size_t>(g.n()), 0) {}

  int component_longest(const std::vector<VertexId>& comp) {
    best_ = 0;
    cap_ = static_cast<int>(comp.size()) - 1;
    for (VertexId s : comp) {
      if (best_ == cap_) break;
      visited_[s] = 1;
      dfs(s, 0);
      visited_[s] = 0;
    }
    return best_;
  }

 private:
  // Unvisited vertices reachable from v; a path can grow by at most this many.
  int reachable(VertexId v) {
    std::vector<VertexId> stack{v};
    std::vector<char> seen(visited_);
    int count = 0;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g_.neighbors(x))
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          stack.push_back(y);
        }
    }
    return count;
  }

  void dfs(VertexId v, int length) {
    best_ = std::max(best_, length);
    if (best_ == cap_) return;
    if (length + reachable(v) <= best_) return;
    for (VertexId w : g_.neighbors(v)) {
      if (visited_[w]) continue;
      visited_[w] = 1;
      dfs(w, length + 1);
      visited_[w] = 0;
      if (best_ == cap_) return;
    }
  }

  const Graph& g_;
  std::vector<char> visited_;
  int best_ = 0;
  int cap_ = 0;
};

inline std::vector<std::vector<VertexId>> graph_components(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (VertexId s = 0; s < static_cast<VertexId>(g.n()); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::vector<VertexId> comp{s};
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (VertexId w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace detail

/// Number of edges on a longest path (exact; exponential in the worst case).
inline int longest_path(const Graph& g) {
  detail::LongestPathSearch search(g);
  int best = 0;
  for (const auto& comp : detail::graph_components(g)) {
    if (static_cast<int>(comp.size()) - 1 <= best) continue;
    best = std::max(best, search.component_longest(comp));
  }
  return best;
}

inline bool is_pk_free(const Graph& g, int k) { return longest_path(g) < k; }

}  // namespace bergepath

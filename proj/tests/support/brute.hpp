#pragma once

// Slow reference implementations. They share nothing with the library's
// search code beyond the data types: every vertex sequence and every injective
// hyperedge assignment is enumerated explicitly.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "bergepath/graph.hpp"
#include "bergepath/hypergraph.hpp"

namespace brute {

using bergepath::Graph;
using bergepath::Hypergraph;
using bergepath::VertexId;

inline bool assignable(const Hypergraph& h, const std::vector<VertexId>& seq, bool closed) {
  const std::size_t pairs = closed ? seq.size() : seq.size() - 1;
  std::vector<char> used(h.edge_count(), 0);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == pairs) return true;
    const VertexId a = seq[i], b = seq[(i + 1) % seq.size()];
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      if (used[e]) continue;
      const auto& vs = h.edge(e).vertices();
      if (std::find(vs.begin(), vs.end(), a) == vs.end() || std::find(vs.begin(), vs.end(), b) == vs.end()) continue;
      used[e] = 1;
      if (go(i + 1)) return true;
      used[e] = 0;
    }
    return false;
  };
  return go(0);
}

// Every sequence of `len` distinct vertices, in lexicographic order.
inline bool any_sequence(int n, int len, const std::function<bool(const std::vector<VertexId>&)>& f) {
  std::vector<VertexId> seq;
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  std::function<bool()> go = [&]() {
    if (static_cast<int>(seq.size()) == len) return f(seq);
    for (int v = 0; v < n; ++v) {
      if (on[static_cast<std::size_t>(v)]) continue;
      on[static_cast<std::size_t>(v)] = 1;
      seq.push_back(static_cast<VertexId>(v));
      const bool hit = go();
      seq.pop_back();
      on[static_cast<std::size_t>(v)] = 0;
      if (hit) return true;
    }
    return false;
  };
  return go();
}

inline bool has_berge_path(const Hypergraph& h, int k) {
  if (k + 1 > h.n()) return false;
  return any_sequence(h.n(), k + 1, [&](const std::vector<VertexId>& s) { return assignable(h, s, false); });
}

inline bool has_berge_cycle(const Hypergraph& h, int k) {
  if (k > h.n()) return false;
  return any_sequence(h.n(), k, [&](const std::vector<VertexId>& s) { return assignable(h, s, true); });
}

inline int longest_berge_path(const Hypergraph& h) {
  int best = 0;
  while (best + 1 <= h.n() - 1 && has_berge_path(h, best + 1)) ++best;
  return best;
}

inline int longest_graph_path(const Graph& g) {
  int best = 0;
  std::vector<char> on(static_cast<std::size_t>(g.n()), 0);
  std::function<void(VertexId, int)> go = [&](VertexId v, int len) {
    best = std::max(best, len);
    on[v] = 1;
    for (int w = 0; w < g.n(); ++w)
      if (!on[static_cast<std::size_t>(w)] && g.adjacent(v, static_cast<VertexId>(w))) go(static_cast<VertexId>(w), len + 1);
    on[v] = 0;
  };
  for (int v = 0; v < g.n(); ++v) go(static_cast<VertexId>(v), 0);
  return best;
}

inline std::uint64_t count_cliques(const Graph& g, int r) {
  std::uint64_t count = 0;
  std::vector<VertexId> pick;
  std::function<void(int)> go = [&](int from) {
    if (static_cast<int>(pick.size()) == r) {
      ++count;
      return;
    }
    for (int v = from; v < g.n(); ++v) {
      bool ok = true;
      for (VertexId u : pick) ok = ok && g.adjacent(u, static_cast<VertexId>(v));
      if (!ok) continue;
      pick.push_back(static_cast<VertexId>(v));
      go(v + 1);
      pick.pop_back();
    }
  };
  go(0);
  return count;
}

}  // namespace brute

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bergepath/error.hpp"

namespace bergepath {

/// Dense 0-based vertex index.
using VertexId = std::uint32_t;

/// Bitset mirror width; structures on at most this many vertices carry masks.
inline constexpr int kMaskVertices = 64;

using VertexMask = std::uint64_t;

inline VertexMask bit(VertexId v) { return VertexMask{1} << v; }

/// A set of vertices stored as a strictly increasing list.
class Hyperedge {
 public:
  Hyperedge() = default;
  Hyperedge(std::initializer_list<VertexId> vs) : Hyperedge(std::vector<VertexId>(vs)) {}

  explicit Hyperedge(std::vector<VertexId> vs) : vertices_(std::move(vs)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
      throw error(errc::invalid_input, "hyperedge repeats a vertex");
  }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }

  bool contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  bool meets(std::span<const VertexId> sorted_set) const {
    auto a = vertices_.begin();
    auto b = sorted_set.begin();
    while (a != vertices_.end() && b != sorted_set.end()) {
      if (*a == *b) return true;
      if (*a < *b) ++a; else ++b;
    }
    return false;
  }

  /// Only meaningful when every vertex is below kMaskVertices.
  VertexMask mask() const {
    VertexMask m = 0;
    for (VertexId v : vertices_) m |= bit(v);
    return m;
  }

  auto operator<=>(const Hyperedge&) const = default;
  bool operator==(const Hyperedge&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

inline std::string to_string(const Hyperedge& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + "}";
}

/// Simple r-uniform hypergraph on vertices {0, ..., n-1}. Immutable once built;
/// hyperedges are kept in lexicographic order.
class Hypergraph {
 public:
  Hypergraph(int n, int r, std::vector<Hyperedge> edges = {}) : n_(n), r_(r), edges_(std::move(edges)) {
    if (n < 0) throw error(errc::invalid_parameter, "vertex count must be nonnegative");
    if (r < 2) throw error(errc::invalid_parameter, "uniformity r must be at least 2");
    for (const auto& e : edges_) {
      if (static_cast<int>(e.size()) != r)
        throw error(errc::invalid_input, "hyperedge " + to_string(e) + " does not have r = " +
                                             std::to_string(r) + " vertices");
      if (e.size() && static_cast<int>(e.vertices().back()) >= n)
        throw error(errc::invalid_vertex, "hyperedge " + to_string(e) + " exceeds n = " + std::to_string(n));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
      throw error(errc::invalid_input, "duplicate hyperedge " + to_string(*dup));

    incidence_.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < edges_.size(); ++i)
      for (VertexId v : edges_[i]) incidence_[v].push_back(i);
    if (n <= kMaskVertices) {
      masks_.reserve(edges_.size());
      for (const auto& e : edges_) masks_.push_back(e.mask());
    }
  }

  int n() const { return n_; }
  int r() const { return r_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(std::size_t i) const { return edges_[i]; }

  bool has_masks() const { return n_ <= kMaskVertices; }
  /// Empty unless has_masks().
  std::span<const VertexMask> masks() const { return masks_; }

  /// Indices of the hyperedges containing v.
  const std::vector<std::size_t>& incident(VertexId v) const {
    check_vertex(v);
    return incidence_[v];
  }

  std::size_t degree(VertexId v) const { return incident(v).size(); }

  std::size_t min_degree() const {
    std::size_t d = edges_.size();
    for (const auto& inc : incidence_) d = std::min(d, inc.size());
    return n_ == 0 ? 0 : d;
  }

  std::optional<std::size_t> find(const Hyperedge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool contains(const Hyperedge& e) const { return find(e).has_value(); }

  void check_vertex(VertexId v) const {
    if (static_cast<long long>(v) >= n_)
      throw error(errc::invalid_vertex, "vertex " + std::to_string(v) + " is not below n = " + std::to_string(n_));
  }

  VertexMask all_vertices_mask() const {
    return n_ >= 64 ? ~VertexMask{0} : (bit(static_cast<VertexId>(n_)) - 1);
  }

  bool operator==(const Hypergraph& o) const { return n_ == o.n_ && r_ == o.r_ && edges_ == o.edges_; }

 private:
  int n_;
  int r_;
  std::vector<Hyperedge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<VertexMask> masks_;
};

namespace detail {

inline std::vector<VertexId> normalized_set(const Hypergraph& h, std::span<const VertexId> s) {
  std::vector<VertexId> out(s.begin(), s.end());
  for (VertexId v : out) h.check_vertex(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// Indices of the hyperedges meeting S, i.e. N_H(S).
inline std::vector<std::size_t> incident_edge_indices(const Hypergraph& h, std::span<const VertexId> s) {
  auto set = detail::normalized_set(h, s);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    if (h.edge(i).meets(set)) out.push_back(i);
  return out;
}

inline std::vector<Hyperedge> incident_edges(const Hypergraph& h, std::span<const VertexId> s) {
  std::vector<Hyperedge> out;
  for (std::size_t i : incident_edge_indices(h, s)) out.push_back(h.edge(i));
  return out;
}

inline std::vector<Hyperedge> incident_edges(const Hypergraph& h, std::initializer_list<VertexId> s) {
  return incident_edges(h, std::span<const VertexId>(s.begin(), s.size()));
}

/// Removes U and every hyperedge meeting it; survivors are renumbered densely
/// in their original order.
inline Hypergraph delete_vertices(const Hypergraph& h, std::span<const VertexId> u) {
  auto removed = detail::normalized_set(h, u);
  std::vector<VertexId> new_id(static_cast<std::size_t>(h.n()), 0);
  VertexId next = 0;
  for (VertexId v = 0; v < static_cast<VertexId>(h.n()); ++v) {
    if (std::binary_search(removed.begin(), removed.end(), v)) continue;
    new_id[v] = next++;
  }
  std::vector<Hyperedge> kept;
  for (const auto& e : h.edges()) {
    if (e.meets(removed)) continue;
    std::vector<VertexId> vs;
    for (VertexId v : e) vs.push_back(new_id[v]);
    kept.emplace_back(std::move(vs));
  }
  return Hypergraph(static_cast<int>(next), h.r(), std::move(kept));
}

inline Hypergraph delete_vertices(const Hypergraph& h, std::initializer_list<VertexId> u) {
  return delete_vertices(h, std::span<const VertexId>(u.begin(), u.size()));
}

/// Connected components (chains of intersecting hyperedges). Each component is
/// sorted; components are ordered by their smallest vertex.
inline std::vector<std::vector<VertexId>> components(const Hypergraph& h) {
  std::vector<VertexId> parent(static_cast<std::size_t>(h.n()));
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : h.edges())
    for (std::size_t i = 1; i < e.size(); ++i) {
      VertexId a = find(e[0]), b = find(e[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<VertexId>> out;
  std::vector<int> slot(static_cast<std::size_t>(h.n()), -1);
  for (VertexId v = 0; v < static_cast<VertexId>(h.n()); ++v) {
    VertexId root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[root])].push_back(v);
  }
  return out;
}

/// Complete r-graph on the given vertices.
inline std::vector<Hyperedge> complete_edges(std::span<const VertexId> vertices, int r) {
  std::vector<Hyperedge> out;
  const int m = static_cast<int>(vertices.size());
  if (r > m || r <= 0) return out;
  std::vector<int> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<VertexId> vs;
    for (int i : idx) vs.push_back(vertices[static_cast<std::size_t>(i)]);
    out.emplace_back(std::move(vs));
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - r + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

inline Hypergraph complete_hypergraph(int n, int r) {
  std::vector<VertexId> vs(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(vs.begin(), vs.end(), VertexId{0});
  return Hypergraph(n, r, complete_edges(vs, r));
}

}  // namespace bergepath

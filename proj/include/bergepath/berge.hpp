#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bergepath/arith.hpp"
#include "bergepath/budget.hpp"
#include "bergepath/error.hpp"
#include "bergepath/hypergraph.hpp"

namespace bergepath {

enum class WalkKind { path, cycle };

inline std::string_view to_string(WalkKind k) { return k == WalkKind::path ? "path" : "cycle"; }

/// Defining vertices plus the hyperedge assigned to each consecutive pair.
///
/// For a path of length k there are k + 1 vertices and edges[i] covers
/// (vertices[i], vertices[i+1]). A cycle of length k has k vertices and
/// edges[k-1] covers the closing pair (vertices[k-1], vertices[0]).
struct BergeWitness {
  WalkKind kind = WalkKind::path;
  std::vector<VertexId> vertices;
  std::vector<Hyperedge> edges;

  std::size_t length() const { return edges.size(); }
  bool operator==(const BergeWitness&) const = default;
};

enum class WitnessDefect {
  none,
  wrong_length,
  invalid_vertex,
  repeated_vertex,
  repeated_edge,
  edge_not_in_hypergraph,
  pair_not_covered,
};

inline std::string_view to_string(WitnessDefect d) {
  switch (d) {
    case WitnessDefect::none: return "none";
    case WitnessDefect::wrong_length: return "wrong-length";
    case WitnessDefect::invalid_vertex: return "invalid-vertex";
    case WitnessDefect::repeated_vertex: return "repeated-vertex";
    case WitnessDefect::repeated_edge: return "repeated-edge";
    case WitnessDefect::edge_not_in_hypergraph: return "edge-not-in-hypergraph";
    case WitnessDefect::pair_not_covered: return "pair-not-covered";
  }
  return "unknown";
}

struct WitnessCheck {
  WitnessDefect defect = WitnessDefect::none;
  /// Offending position in vertices/edges, when the defect has one.
  std::size_t position = 0;

  bool valid() const { return defect == WitnessDefect::none; }
  explicit operator bool() const { return valid(); }
};

inline WitnessCheck verify_witness(const Hypergraph& h, const BergeWitness& w) {
  const std::size_t k = w.edges.size();
  const bool cycle = w.kind == WalkKind::cycle;
  if (k == 0 || (cycle && k < 2) || w.vertices.size() != (cycle ? k : k + 1))
    return {WitnessDefect::wrong_length, 0};
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (static_cast<int>(w.vertices[i]) >= h.n()) return {WitnessDefect::invalid_vertex, i};
    for (std::size_t j = 0; j < i; ++j)
      if (w.vertices[j] == w.vertices[i]) return {WitnessDefect::repeated_vertex, i};
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (w.edges[j] == w.edges[i]) return {WitnessDefect::repeated_edge, i};
    if (!h.contains(w.edges[i])) return {WitnessDefect::edge_not_in_hypergraph, i};
    VertexId a = w.vertices[i];
    VertexId b = w.vertices[(i + 1) % w.vertices.size()];
    if (!w.edges[i].contains(a) || !w.edges[i].contains(b)) return {WitnessDefect::pair_not_covered, i};
  }
  return {};
}

namespace detail {

/// Depth-first growth of a distinct-vertex sequence. Each consecutive pair is
/// a left node of a bipartite graph whose right side is the hyperedge set; a
/// pair is adjacent to every hyperedge containing both its vertices. Each
/// appended vertex adds one pair and runs a single augmenting-path search, so
/// the sequence is extended only while a system of distinct representatives
/// exists. Removing the most recent pair keeps the rest of the matching valid.
class BergeEngine {
 public:
  BergeEngine(int n, std::span<const VertexMask> edges, BudgetMeter& meter)
      : n_(n), edges_(edges.begin(), edges.end()), meter_(meter) {
    if (n > kMaskVertices)
      throw error(errc::invalid_parameter, "Berge search supports at most 64 vertices");
    neighbors_.assign(static_cast<std::size_t>(n), 0);
    for (VertexMask e : edges_)
      for (VertexMask rest = e; rest; rest &= rest - 1) {
        auto v = static_cast<VertexId>(std::countr_zero(rest));
        neighbors_[v] |= e & ~bit(v);
      }
    edge_owner_.assign(edges_.size(), -1);
    edge_stamp_.assign(edges_.size(), 0);
    seq_.assign(2 * static_cast<std::size_t>(n) + 2, 0);
    link_.assign(seq_.size(), -1);
    allowed_ = n >= 64 ? ~VertexMask{0} : bit(static_cast<VertexId>(n)) - 1;
  }

  void restrict_to(VertexMask allowed) {
    allowed_ = allowed & (n_ >= 64 ? ~VertexMask{0} : bit(static_cast<VertexId>(n_)) - 1);
  }
  VertexMask allowed() const { return allowed_; }

  bool aborted() const { return aborted_; }

  /// Berge path of the given length starting at s; if end is set it must be
  /// the last vertex.
  bool path_from(VertexId s, int length, std::optional<VertexId> end = std::nullopt) {
    reset(WalkKind::path, length);
    end_ = end;
    if (!(allowed_ & bit(s))) return false;
    if (end && (*end == s || !(allowed_ & bit(*end)))) return false;
    push_back_vertex(s);
    return grow(0, length);
  }

  /// Berge cycle of the given length whose smallest defining vertex is s.
  bool cycle_with_min(VertexId s, int length) {
    reset(WalkKind::cycle, length);
    if (!(allowed_ & bit(s))) return false;
    const VertexMask saved = allowed_;
    allowed_ &= ~(bit(s) - 1);
    push_back_vertex(s);
    bool ok = grow(0, length - 1);
    allowed_ = saved;
    return ok;
  }

  /// Berge path of the given length in which some consecutive pair lies inside
  /// edges[e]. When the hypergraph minus e has no such path, this decides
  /// whether adding e created one.
  bool path_through(std::size_t e, int length) {
    const VertexMask inside = edges_[e] & allowed_;
    for (VertexMask ra = inside; ra; ra &= ra - 1) {
      auto a = static_cast<VertexId>(std::countr_zero(ra));
      for (VertexMask rb = inside & ~bit(a); rb; rb &= rb - 1) {
        auto b = static_cast<VertexId>(std::countr_zero(rb));
        for (int left = 0; left <= length - 1; ++left) {
          reset(WalkKind::path, length);
          push_back_vertex(a);
          if (!meter_.tick()) {
            aborted_ = true;
            return false;
          }
          if (!add_pair(a, b)) return false;  // unreachable: e covers {a, b}
          link_[tail_ - 1] = last_pair();
          push_back_vertex(b);
          if (grow(left, length - 1 - left)) return true;
          if (aborted_) return false;
        }
      }
    }
    return false;
  }

  /// Calls visit(vertices) for every vertex sequence of a Berge path of the
  /// given length that starts at s (each sequence once, in its orientation
  /// from s). Stops early when visit returns false.
  void for_each_path_from(VertexId s, int length, const std::function<bool(std::span<const VertexId>)>& visit) {
    visitor_ = &visit;
    path_from(s, length);
    visitor_ = nullptr;
  }

  std::vector<VertexId> sequence() const {
    return {seq_.begin() + static_cast<std::ptrdiff_t>(head_), seq_.begin() + static_cast<std::ptrdiff_t>(tail_)};
  }

  /// Edge indices in path order (closing edge last for cycles).
  std::vector<std::size_t> assignment() const {
    std::vector<std::size_t> out;
    for (std::size_t slot = head_; slot + 1 < tail_; ++slot)
      out.push_back(static_cast<std::size_t>(pair_edge_[static_cast<std::size_t>(link_[slot])]));
    if (kind_ == WalkKind::cycle) out.push_back(static_cast<std::size_t>(pair_edge_[static_cast<std::size_t>(closing_)]));
    return out;
  }

 private:
  void reset(WalkKind kind, int length) {
    kind_ = kind;
    length_ = length;
    end_.reset();
    head_ = tail_ = static_cast<std::size_t>(n_) + 1;
    used_ = 0;
    pair_u_.clear();
    pair_v_.clear();
    pair_edge_.clear();
    std::fill(edge_owner_.begin(), edge_owner_.end(), -1);
    closing_ = -1;
  }

  int last_pair() const { return static_cast<int>(pair_u_.size()) - 1; }

  void push_back_vertex(VertexId v) {
    seq_[tail_++] = v;
    used_ |= bit(v);
  }

  bool augment(int p) {
    const VertexMask want = bit(pair_u_[static_cast<std::size_t>(p)]) | bit(pair_v_[static_cast<std::size_t>(p)]);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if ((edges_[e] & want) != want || edge_stamp_[e] == stamp_) continue;
      edge_stamp_[e] = stamp_;
      const int owner = edge_owner_[e];
      if (owner < 0 || augment(owner)) {
        edge_owner_[e] = p;
        pair_edge_[static_cast<std::size_t>(p)] = static_cast<int>(e);
        return true;
      }
    }
    return false;
  }

  bool add_pair(VertexId u, VertexId v) {
    pair_u_.push_back(u);
    pair_v_.push_back(v);
    pair_edge_.push_back(-1);
    ++stamp_;
    if (augment(last_pair())) return true;
    pair_u_.pop_back();
    pair_v_.pop_back();
    pair_edge_.pop_back();
    return false;
  }

  void remove_last_pair() {
    edge_owner_[static_cast<std::size_t>(pair_edge_.back())] = -1;
    pair_u_.pop_back();
    pair_v_.pop_back();
    pair_edge_.pop_back();
  }

  bool finish() {
    if (kind_ == WalkKind::cycle) {
      if (length_ >= 3 && seq_[head_ + 1] > seq_[tail_ - 1]) return false;  // each cycle once per direction
      if (!add_pair(seq_[tail_ - 1], seq_[head_])) return false;
      closing_ = last_pair();
      if (!visitor_) return true;
      bool stop = !(*visitor_)(sequence());
      remove_last_pair();
      return stop;
    }
    if (!visitor_) return true;
    return !(*visitor_)(sequence());
  }

  // Grows the front by `front` vertices, then the back by `back` vertices.
  bool grow(int front, int back) {
    if (front == 0 && back == 0) return finish();
    const VertexMask free = allowed_ & ~used_;
    if (std::popcount(free) < front + back) return false;
    const bool at_front = front > 0;
    const VertexId anchor = at_front ? seq_[head_] : seq_[tail_ - 1];
    VertexMask cand = neighbors_[anchor] & free;
    if (!at_front && end_) cand &= back == 1 ? bit(*end_) : ~bit(*end_);
    for (; cand; cand &= cand - 1) {
      auto v = static_cast<VertexId>(std::countr_zero(cand));
      if (!meter_.tick()) {
        aborted_ = true;
        return false;
      }
      if (at_front ? !add_pair(v, anchor) : !add_pair(anchor, v)) continue;
      if (at_front) {
        seq_[--head_] = v;
        link_[head_] = last_pair();
      } else {
        link_[tail_ - 1] = last_pair();
        seq_[tail_++] = v;
      }
      used_ |= bit(v);
      if (at_front ? grow(front - 1, back) : grow(0, back - 1)) return true;
      used_ &= ~bit(v);
      if (at_front) ++head_; else --tail_;
      remove_last_pair();
      if (aborted_) return false;
    }
    return false;
  }

  int n_;
  std::vector<VertexMask> edges_;
  BudgetMeter& meter_;
  std::vector<VertexMask> neighbors_;
  VertexMask allowed_ = 0;

  WalkKind kind_ = WalkKind::path;
  int length_ = 0;
  std::optional<VertexId> end_;
  std::vector<VertexId> seq_;
  std::vector<int> link_;  // link_[slot]: pair joining seq_[slot] and seq_[slot + 1]
  std::size_t head_ = 0;
  std::size_t tail_ = 0;
  VertexMask used_ = 0;

  std::vector<VertexId> pair_u_;
  std::vector<VertexId> pair_v_;
  std::vector<int> pair_edge_;
  std::vector<int> edge_owner_;
  std::vector<std::uint64_t> edge_stamp_;
  std::uint64_t stamp_ = 0;
  int closing_ = -1;

  bool aborted_ = false;
  const std::function<bool(std::span<const VertexId>)>* visitor_ = nullptr;
};

inline void require_masks(const Hypergraph& h) {
  if (!h.has_masks()) throw error(errc::invalid_parameter, "Berge search supports at most 64 vertices");
}

inline VertexMask swap_bits(VertexMask m, VertexId u, VertexId v) {
  const bool hu = (m >> u) & 1u, hv = (m >> v) & 1u;
  return hu == hv ? m : m ^ (bit(u) | bit(v));
}

/// Twin classes: u ~ v when the transposition (u v) is an automorphism that
/// also preserves `allowed`. The relation is an equivalence and every class is
/// inside one automorphism orbit, so only one start per class needs a search.
inline std::vector<int> twin_classes(const Hypergraph& h, VertexMask allowed) {
  std::vector<VertexMask> sorted(h.masks().begin(), h.masks().end());
  std::sort(sorted.begin(), sorted.end());
  auto is_twin = [&](VertexId u, VertexId v) {
    for (VertexMask e : sorted) {
      VertexMask s = swap_bits(e, u, v);
      if (s != e && !std::binary_search(sorted.begin(), sorted.end(), s)) return false;
    }
    return true;
  };
  std::vector<int> cls(static_cast<std::size_t>(h.n()), -1);
  std::vector<VertexId> reps;
  for (VertexId v = 0; v < static_cast<VertexId>(h.n()); ++v) {
    if (!(allowed & bit(v))) continue;
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (h.degree(reps[c]) == h.degree(v) && is_twin(reps[c], v)) {
        cls[v] = static_cast<int>(c);
        break;
      }
    if (cls[v] < 0) {
      cls[v] = static_cast<int>(reps.size());
      reps.push_back(v);
    }
  }
  return cls;
}

struct ComponentInfo {
  VertexMask vertices = 0;
  std::size_t edges = 0;
};

inline std::vector<ComponentInfo> component_infos(const Hypergraph& h) {
  std::vector<ComponentInfo> out;
  std::vector<int> of(static_cast<std::size_t>(h.n()), -1);
  for (const auto& comp : components(h)) {
    ComponentInfo info;
    for (VertexId v : comp) {
      info.vertices |= bit(v);
      of[v] = static_cast<int>(out.size());
    }
    out.push_back(info);
  }
  for (const auto& e : h.edges()) ++out[static_cast<std::size_t>(of[e[0]])].edges;
  return out;
}

inline BergeWitness make_witness(const Hypergraph& h, const BergeEngine& engine, WalkKind kind) {
  BergeWitness w;
  w.kind = kind;
  w.vertices = engine.sequence();
  for (std::size_t e : engine.assignment()) w.edges.push_back(h.edge(e));
  return w;
}

}  // namespace detail

struct BergeSearchResult {
  SearchStatus status = SearchStatus::not_found;
  std::optional<BergeWitness> witness;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::found; }
};

/// Searches for a Berge path (or cycle) of length k whose defining vertices
/// all lie in `allowed`. Hyperedges are unrestricted.
inline BergeSearchResult search_berge_walk(const Hypergraph& h, WalkKind kind, int k, VertexMask allowed,
                                           const Budget& budget = {}) {
  detail::require_masks(h);
  if (k < (kind == WalkKind::path ? 1 : 2))
    throw error(errc::invalid_parameter, std::string("Berge ") + std::string(to_string(kind)) + " length too small");
  BudgetMeter meter(budget);
  BergeSearchResult out;
  detail::BergeEngine engine(h.n(), h.masks(), meter);
  const int need_vertices = kind == WalkKind::path ? k + 1 : k;

  for (const auto& comp : detail::component_infos(h)) {
    const VertexMask scope = comp.vertices & allowed;
    if (std::popcount(scope) < need_vertices || comp.edges < static_cast<std::size_t>(k)) continue;
    engine.restrict_to(scope);
    if (kind == WalkKind::path) {
      auto cls = detail::twin_classes(h, scope);
      std::vector<char> tried(static_cast<std::size_t>(h.n()), 0);
      for (VertexMask rest = scope; rest; rest &= rest - 1) {
        auto s = static_cast<VertexId>(std::countr_zero(rest));
        if (tried[static_cast<std::size_t>(cls[s])]) continue;
        tried[static_cast<std::size_t>(cls[s])] = 1;
        if (engine.path_from(s, k)) {
          out.status = SearchStatus::found;
          out.witness = detail::make_witness(h, engine, kind);
          out.nodes = meter.nodes();
          return out;
        }
        if (engine.aborted()) break;
      }
    } else {
      for (VertexMask rest = scope; std::popcount(rest) >= need_vertices; rest &= rest - 1) {
        auto s = static_cast<VertexId>(std::countr_zero(rest));
        if (engine.cycle_with_min(s, k)) {
          out.status = SearchStatus::found;
          out.witness = detail::make_witness(h, engine, kind);
          out.nodes = meter.nodes();
          return out;
        }
        if (engine.aborted()) break;
      }
    }
    if (engine.aborted()) break;
  }
  out.status = engine.aborted() ? SearchStatus::budget_exhausted : SearchStatus::not_found;
  out.nodes = meter.nodes();
  return out;
}

inline BergeSearchResult search_berge_path(const Hypergraph& h, int k, const Budget& budget = {}) {
  return search_berge_walk(h, WalkKind::path, k, ~VertexMask{0}, budget);
}

inline BergeSearchResult search_berge_cycle(const Hypergraph& h, int k, const Budget& budget = {}) {
  return search_berge_walk(h, WalkKind::cycle, k, ~VertexMask{0}, budget);
}

inline std::optional<BergeWitness> find_berge_path(const Hypergraph& h, int k) {
  return search_berge_path(h, k, Budget::unlimited()).witness;
}

/// Length 2 is searched like any other: on r >= 3 two distinct hyperedges may
/// share a pair; for r = 2 simple graphs the answer is always empty.
inline std::optional<BergeWitness> find_berge_cycle(const Hypergraph& h, int k) {
  return search_berge_cycle(h, k, Budget::unlimited()).witness;
}

/// Whether a Berge path of length k uses the hyperedge with the given index on
/// one of its consecutive pairs.
inline BergeSearchResult search_berge_path_through(const Hypergraph& h, std::size_t edge_index, int k,
                                                   const Budget& budget = {}) {
  detail::require_masks(h);
  if (k < 1) throw error(errc::invalid_parameter, "Berge path length must be at least 1");
  if (edge_index >= h.edge_count()) throw error(errc::invalid_input, "edge index out of range");
  BudgetMeter meter(budget);
  detail::BergeEngine engine(h.n(), h.masks(), meter);
  BergeSearchResult out;
  if (engine.path_through(edge_index, k)) {
    out.status = SearchStatus::found;
    out.witness = detail::make_witness(h, engine, WalkKind::path);
  } else {
    out.status = engine.aborted() ? SearchStatus::budget_exhausted : SearchStatus::not_found;
  }
  out.nodes = meter.nodes();
  return out;
}

/// Every distinct vertex sequence (both orientations) of a Berge path of length
/// k; visit returns false to stop.
inline void for_each_berge_path(const Hypergraph& h, int k,
                                const std::function<bool(std::span<const VertexId>)>& visit) {
  detail::require_masks(h);
  if (k < 1) throw error(errc::invalid_parameter, "Berge path length must be at least 1");
  BudgetMeter meter(Budget::unlimited());
  detail::BergeEngine engine(h.n(), h.masks(), meter);
  bool stopped = false;
  std::function<bool(std::span<const VertexId>)> wrapped = [&](std::span<const VertexId> seq) {
    if (!visit(seq)) stopped = true;
    return !stopped;
  };
  for (VertexId s = 0; s < static_cast<VertexId>(h.n()) && !stopped; ++s) engine.for_each_path_from(s, k, wrapped);
}

struct LongestBergePath {
  int length = 0;
  std::optional<BergeWitness> witness;
  /// found: length is exact; budget_exhausted: length is only a lower bound.
  SearchStatus status = SearchStatus::found;
  std::uint64_t nodes = 0;
};

/// Lengths are probed upward (a Berge path of length k contains one of every
/// shorter length) up to min(n - 1, |E|).
inline LongestBergePath longest_berge_path(const Hypergraph& h, const Budget& budget = Budget::unlimited()) {
  LongestBergePath out;
  const int cap = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(std::max(h.n() - 1, 0)), h.edge_count()));
  for (int k = 1; k <= cap; ++k) {
    auto res = search_berge_path(h, k, budget);
    out.nodes += res.nodes;
    if (res.status == SearchStatus::budget_exhausted) {
      out.status = SearchStatus::budget_exhausted;
      return out;
    }
    if (!res.found()) break;
    out.length = k;
    out.witness = std::move(res.witness);
  }
  return out;
}

/// Hamiltonian Berge path between u and v.
inline BergeSearchResult search_hamiltonian_path(const Hypergraph& h, VertexId u, VertexId v, const Budget& budget = {}) {
  detail::require_masks(h);
  h.check_vertex(u);
  h.check_vertex(v);
  BudgetMeter meter(budget);
  detail::BergeEngine engine(h.n(), h.masks(), meter);
  BergeSearchResult out;
  if (u != v && engine.path_from(u, h.n() - 1, v)) {
    out.status = SearchStatus::found;
    out.witness = detail::make_witness(h, engine, WalkKind::path);
  } else {
    out.status = engine.aborted() ? SearchStatus::budget_exhausted : SearchStatus::not_found;
  }
  out.nodes = meter.nodes();
  return out;
}

/// True iff every pair of vertices is joined by a hamiltonian Berge path.
inline bool is_hamiltonian_connected(const Hypergraph& h) {
  if (h.n() < 2) throw error(errc::invalid_parameter, "hamiltonian-connectedness needs n >= 2");
  if (h.edge_count() < static_cast<std::size_t>(h.n() - 1)) return false;
  for (VertexId u = 0; u < static_cast<VertexId>(h.n()); ++u)
    for (VertexId v = u + 1; v < static_cast<VertexId>(h.n()); ++v)
      if (!search_hamiltonian_path(h, u, v, Budget::unlimited()).found()) return false;
  return true;
}

/// Sufficient conditions for hamiltonian-connectedness in terms of n, r and
/// the minimum degree:
///   (i)   2r <= n and delta >= C(floor(n/2), r-1) + 1
///   (ii)  n - 1 >= r, 2r > n, n >= 6 and delta >= r - 1
///   (iii) r = 3, n = 5 and delta >= 3
inline bool klm_hypothesis(int n, int r, std::size_t min_degree) {
  if (r < 3) throw error(errc::out_of_theorem_range, "the minimum-degree conditions need r >= 3");
  if (n < r) throw error(errc::out_of_theorem_range, "the minimum-degree conditions need n >= r");
  const bool case_i = 2 * r <= n && min_degree >= checked_add(binom_s(n / 2, r - 1), 1);
  const bool case_ii = n - 1 >= r && 2 * r > n && n >= 6 && min_degree >= static_cast<std::size_t>(r - 1);
  const bool case_iii = r == 3 && n == 5 && min_degree >= 3;
  return case_i || case_ii || case_iii;
}

inline bool klm_hypothesis(const Hypergraph& h) { return klm_hypothesis(h.n(), h.r(), h.min_degree()); }

}  // namespace bergepath

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bergepath/arith.hpp"
#include "bergepath/error.hpp"
#include "bergepath/graph.hpp"
#include "bergepath/hypergraph.hpp"

namespace bergepath {

/// (n, r, k) with n = p*k + q, 0 <= q < k.
class TuranParams {
 public:
  TuranParams(int n, int r, int k) : n_(n), r_(r), k_(k) {
    if (n < 1) throw error(errc::invalid_parameter, "n must be at least 1");
    if (r < 2) throw error(errc::invalid_parameter, "r must be at least 2");
    if (k < 2) throw error(errc::invalid_parameter, "k must be at least 2");
  }

  int n() const { return n_; }
  int r() const { return r_; }
  int k() const { return k_; }
  int p() const { return n_ / k_; }
  int q() const { return n_ % k_; }

  bool operator==(const TuranParams&) const = default;

 private:
  int n_, r_, k_;
};

enum class TuranRegime {
  matching,      // k = 2
  small_k,       // 3 <= k <= r
  large_k,       // k >= r + 1
};

inline std::string_view to_string(TuranRegime regime) {
  switch (regime) {
    case TuranRegime::matching: return "matching";
    case TuranRegime::small_k: return "GLSZ";
    case TuranRegime::large_k: return "k>r";
  }
  return "unknown";
}

inline TuranRegime turan_regime(const TuranParams& p) {
  if (p.k() == 2) return TuranRegime::matching;
  if (p.k() <= p.r()) return TuranRegime::small_k;
  return TuranRegime::large_k;
}

/// r = 2 is evaluated by the k > r branch but is not covered by the hypergraph
/// result; reports flag it.
inline bool outside_proven_range(const TuranParams& p) { return p.r() < 3; }

/// Exact Turán number of the Berge path of length k in r-graphs on n vertices:
///   k >= r + 1:    p*C(k, r) + C(q, r)
///   3 <= k <= r:   floor(n / (r + 1)) * (k - 1) + [(r + 1) | (n + 1)]
///   k = 2:         floor(n / r)
inline Count turan_formula(const TuranParams& p) {
  switch (turan_regime(p)) {
    case TuranRegime::matching:
      return static_cast<Count>(p.n() / p.r());
    case TuranRegime::small_k: {
      Count blocks = static_cast<Count>(p.n() / (p.r() + 1));
      Count extra = (p.n() + 1) % (p.r() + 1) == 0 ? 1 : 0;
      return checked_add(checked_mul(blocks, static_cast<Count>(p.k() - 1)), extra);
    }
    case TuranRegime::large_k:
      return checked_add(checked_mul(static_cast<Count>(p.p()), binom_s(p.k(), p.r())), binom_s(p.q(), p.r()));
  }
  return 0;
}

/// p disjoint complete r-graphs on k vertices, then a complete r-graph on the
/// remaining q vertices (no edges when q < r).
inline Hypergraph construct_extremal(const TuranParams& p) {
  if (p.k() <= p.r())
    throw error(errc::wrong_regime, "construct_extremal needs k >= r + 1; use construct_small_k for k <= r");
  std::vector<Hyperedge> edges;
  std::vector<VertexId> block;
  for (int b = 0; b <= p.p(); ++b) {
    const int size = b < p.p() ? p.k() : p.q();
    block.clear();
    for (int i = 0; i < size; ++i) block.push_back(static_cast<VertexId>(b * p.k() + i));
    auto part = complete_edges(block, p.r());
    edges.insert(edges.end(), part.begin(), part.end());
  }
  return Hypergraph(p.n(), p.r(), std::move(edges));
}

/// n / (r + 1) blocks of r + 1 vertices, each carrying the lexicographically
/// first k - 1 of its r-subsets.
inline Hypergraph construct_small_k(const TuranParams& p) {
  if (p.k() > p.r()) throw error(errc::wrong_regime, "construct_small_k needs 2 <= k <= r; use construct_extremal");
  if (p.n() % (p.r() + 1) != 0)
    throw error(errc::divisibility_violation,
                "construct_small_k needs (r + 1) | n; r + 1 = " + std::to_string(p.r() + 1) +
                    " does not divide n = " + std::to_string(p.n()));
  std::vector<Hyperedge> edges;
  const int blocks = p.n() / (p.r() + 1);
  for (int b = 0; b < blocks; ++b) {
    std::vector<VertexId> block;
    for (int i = 0; i <= p.r(); ++i) block.push_back(static_cast<VertexId>(b * (p.r() + 1) + i));
    auto part = complete_edges(block, p.r());
    edges.insert(edges.end(), part.begin(), part.begin() + (p.k() - 1));
  }
  return Hypergraph(p.n(), p.r(), std::move(edges));
}

/// Blue r-cliques plus red edges.
inline Count g_value(const RedBlueGraph& g, int r) {
  if (r < 2) throw error(errc::invalid_parameter, "r must be at least 2");
  return checked_add(count_cliques(g.blue(), r), g.red().edge_count());
}

/// Maximum of g over P_k-free red-blue graphs on n vertices:
/// p*C(k, r) + (q >= r + 2 ? C(q, r) : C(q, 2)).
inline Count g_upper_bound(const TuranParams& p) {
  if (p.k() < p.r() + 1) throw error(errc::wrong_regime, "g_upper_bound needs k >= r + 1");
  const Count tail = p.q() >= p.r() + 2 ? binom_s(p.q(), p.r()) : binom_s(p.q(), 2);
  return checked_add(checked_mul(static_cast<Count>(p.p()), binom_s(p.k(), p.r())), tail);
}

/// The bound's proof covers k > r + 1; k = r + 1 is evaluated but flagged.
inline bool g_bound_in_proof_regime(const TuranParams& p) { return p.k() > p.r() + 1; }

/// p mono-blue copies of K_k and a K_q that is blue when q >= r + 2, red
/// otherwise.
inline RedBlueGraph construct_redblue_extremal(const TuranParams& p) {
  if (p.k() < p.r() + 1) throw error(errc::wrong_regime, "construct_redblue_extremal needs k >= r + 1");
  std::vector<GraphEdge> red, blue;
  auto add_clique = [](std::vector<GraphEdge>& out, int first, int size) {
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j)
        out.emplace_back(static_cast<VertexId>(first + i), static_cast<VertexId>(first + j));
  };
  for (int b = 0; b < p.p(); ++b) add_clique(blue, b * p.k(), p.k());
  add_clique(p.q() >= p.r() + 2 ? blue : red, p.p() * p.k(), p.q());
  return RedBlueGraph(p.n(), std::move(red), std::move(blue));
}

/// Maximum number of K_r in a P_k-free graph on n vertices: p*C(k, r) + C(q, r).
inline Count kr_count_bound(const TuranParams& p) {
  if (p.r() < 3 || p.r() > p.k()) throw error(errc::out_of_theorem_range, "kr_count_bound needs 3 <= r <= k");
  return checked_add(checked_mul(static_cast<Count>(p.p()), binom_s(p.k(), p.r())), binom_s(p.q(), p.r()));
}

/// max{ floor((n - 1) / r) * (r - 1), n - r + 1 }: edge bound for r-graphs
/// without Berge cycles of length at least r.
inline Count berge_cycle_free_bound(int n, int r) {
  if (r < 3 || n < r) throw error(errc::out_of_theorem_range, "berge_cycle_free_bound needs n >= r >= 3");
  const Count a = checked_mul(static_cast<Count>((n - 1) / r), static_cast<Count>(r - 1));
  const Count b = static_cast<Count>(n - r + 1);
  return std::max(a, b);
}

enum class InequalityVerdict { not_applicable, strict, equality, violated };

inline std::string_view to_string(InequalityVerdict v) {
  switch (v) {
    case InequalityVerdict::not_applicable: return "not-applicable";
    case InequalityVerdict::strict: return "strict";
    case InequalityVerdict::equality: return "equality";
    case InequalityVerdict::violated: return "violated";
  }
  return "unknown";
}

struct LemiReport {
  InequalityVerdict part_i = InequalityVerdict::not_applicable;
  InequalityVerdict part_ii = InequalityVerdict::not_applicable;

  static bool passes(InequalityVerdict v) { return v != InequalityVerdict::violated; }
};

namespace detail {

inline InequalityVerdict compare_le(Count lhs, Count rhs) {
  if (lhs < rhs) return InequalityVerdict::strict;
  if (lhs == rhs) return InequalityVerdict::equality;
  return InequalityVerdict::violated;
}

}  // namespace detail

/// Both sides multiplied by 2r:
///   (i)  k >= r + 2:               r(k - 1)      <= 2 C(k-1, r-1)
///   (ii) 3 <= r <= l <= k - 2:     r(k - l - 1)  <= 2 (C(k-1, r-1) - C(l, r-1))
/// Part (ii) is skipped when l is not supplied.
inline LemiReport lemi_check(int r, int k, std::optional<int> ell = std::nullopt) {
  LemiReport out;
  if (r >= 2 && k >= r + 2)
    out.part_i = detail::compare_le(checked_mul(static_cast<Count>(r), static_cast<Count>(k - 1)),
                                    checked_mul(2, binom_s(k - 1, r - 1)));
  if (ell && r >= 3 && r <= *ell && *ell <= k - 2) {
    // C(l, r-1) <= C(k-1, r-1) since l < k - 1.
    const Count diff = binom_s(k - 1, r - 1) - binom_s(*ell, r - 1);
    out.part_ii = detail::compare_le(checked_mul(static_cast<Count>(r), static_cast<Count>(k - *ell - 1)),
                                     checked_mul(2, diff));
  }
  return out;
}

}  // namespace bergepath

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bergepath/arith.hpp"
#include "bergepath/berge.hpp"
#include "bergepath/error.hpp"
#include "bergepath/hypergraph.hpp"

namespace bergepath {

enum class GoodVerdict { good, very_good, neither };

inline std::string_view to_string(GoodVerdict v) {
  switch (v) {
    case GoodVerdict::good: return "good";
    case GoodVerdict::very_good: return "very_good";
    case GoodVerdict::neither: return "neither";
  }
  return "unknown";
}

/// |N_H(S)| against threshold_numerator / threshold_denominator. The verdict
/// refers to the threshold stored in the report: is_good_set stores
/// |S| C(l, r-1) / r, is_very_good_pair stores (C(l, r-1) + C(l-1, r-1)) / r.
struct GoodSetReport {
  std::vector<VertexId> subset;
  Count incident_count = 0;
  Count threshold_numerator = 0;
  Count threshold_denominator = 1;
  GoodVerdict verdict = GoodVerdict::neither;
  int ell = 0;

  /// Re-evaluates the cross-multiplied inequality from the stored fields.
  bool within_threshold() const {
    return checked_mul(incident_count, threshold_denominator) <= threshold_numerator;
  }
};

namespace detail {

inline void require_long_paths(const Hypergraph& h, int ell) {
  if (ell <= h.r())
    throw error(errc::precondition_violation, "good sets are defined only when the longest Berge path l = " +
                                                  std::to_string(ell) + " exceeds r = " + std::to_string(h.r()));
}

/// Calls f on every size-s subset of {0..n-1} in lexicographic order until f
/// returns false.
inline void for_each_subset(int n, int s, const std::function<bool(std::span<const VertexId>)>& f) {
  if (s < 0 || s > n) return;
  std::vector<VertexId> sub(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) sub[static_cast<std::size_t>(i)] = static_cast<VertexId>(i);
  while (true) {
    if (!f(sub)) return;
    int i = s - 1;
    while (i >= 0 && static_cast<int>(sub[static_cast<std::size_t>(i)]) == n - s + i) --i;
    if (i < 0) return;
    ++sub[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j) sub[static_cast<std::size_t>(j)] = sub[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline std::size_t neighborhood_size(const Hypergraph& h, std::span<const VertexId> s) {
  return incident_edge_indices(h, s).size();
}

}  // namespace detail

inline GoodSetReport is_good_set(const Hypergraph& h, std::span<const VertexId> s, int ell) {
  detail::require_long_paths(h, ell);
  GoodSetReport rep;
  rep.subset = detail::normalized_set(h, s);
  rep.ell = ell;
  rep.incident_count = detail::neighborhood_size(h, rep.subset);
  rep.threshold_numerator = checked_mul(rep.subset.size(), binom_s(ell, h.r() - 1));
  rep.threshold_denominator = static_cast<Count>(h.r());
  rep.verdict = rep.within_threshold() ? GoodVerdict::good : GoodVerdict::neither;
  return rep;
}

inline GoodSetReport is_good_set(const Hypergraph& h, std::initializer_list<VertexId> s, int ell) {
  return is_good_set(h, std::span<const VertexId>(s.begin(), s.size()), ell);
}

inline GoodSetReport is_very_good_pair(const Hypergraph& h, std::span<const VertexId> s, int ell) {
  auto set = detail::normalized_set(h, s);
  if (set.size() != 2) throw error(errc::invalid_input, "a very good set has exactly two vertices");
  detail::require_long_paths(h, ell);
  GoodSetReport rep;
  rep.subset = std::move(set);
  rep.ell = ell;
  rep.incident_count = detail::neighborhood_size(h, rep.subset);
  rep.threshold_numerator = checked_add(binom_s(ell, h.r() - 1), binom_s(ell - 1, h.r() - 1));
  rep.threshold_denominator = static_cast<Count>(h.r());
  rep.verdict = rep.within_threshold() ? GoodVerdict::very_good : GoodVerdict::neither;
  return rep;
}

inline GoodSetReport is_very_good_pair(const Hypergraph& h, std::initializer_list<VertexId> s, int ell) {
  return is_very_good_pair(h, std::span<const VertexId>(s.begin(), s.size()), ell);
}

/// Good subsets of sizes 1..max_size for a caller-supplied longest-path length.
/// Cost grows like C(n, max_size).
inline std::vector<GoodSetReport> find_good_sets(const Hypergraph& h, int max_size, int ell) {
  detail::require_long_paths(h, ell);
  std::vector<GoodSetReport> out;
  for (int s = 1; s <= max_size; ++s)
    detail::for_each_subset(h.n(), s, [&](std::span<const VertexId> sub) {
      auto rep = is_good_set(h, sub, ell);
      if (rep.verdict == GoodVerdict::good) out.push_back(std::move(rep));
      return true;
    });
  return out;
}

inline std::vector<GoodSetReport> find_good_sets(const Hypergraph& h, int max_size) {
  return find_good_sets(h, max_size, longest_berge_path(h).length);
}

enum class LemmaId { endpoint_confinement, low_degree_cluster, small_neighborhood, good_set_disjunction };

inline std::string_view to_string(LemmaId id) {
  switch (id) {
    case LemmaId::endpoint_confinement: return "endpoint_confinement";
    case LemmaId::low_degree_cluster: return "low_degree_cluster";
    case LemmaId::small_neighborhood: return "small_neighborhood";
    case LemmaId::good_set_disjunction: return "good_set_disjunction";
  }
  return "unknown";
}

/// Standalone edge bound for hypergraphs with at most l + 1 vertices once a
/// good pair is found: r |E| <= r C(l-1, r) + C(l-1, r-1) + C(l, r-1).
/// Recorded, never asserted.
struct EdgeBoundCheck {
  Count lhs = 0;
  Count rhs = 0;
  bool holds = false;
};

struct LemmaReport {
  LemmaId lemma = LemmaId::endpoint_confinement;
  bool precondition_ok = false;
  /// Meaningful only when precondition_ok.
  bool holds = false;
  /// 1-based indices of the verified alternatives / bullets.
  std::vector<int> alternatives;
  std::vector<std::vector<VertexId>> witness_sets;
  std::vector<BergeWitness> witness_walks;
  std::string detail;
  /// Longest Berge path length, where the lemma uses it.
  int ell = 0;
  std::optional<EdgeBoundCheck> edge_bound;
};

namespace detail {

inline bool has_path(const Hypergraph& h, int k) {
  if (k > h.n() - 1 || static_cast<std::size_t>(k) > h.edge_count()) return false;
  return search_berge_path(h, k, Budget::unlimited()).found();
}

inline std::optional<BergeWitness> cycle(const Hypergraph& h, int k, VertexMask allowed = ~VertexMask{0}) {
  if (k > h.n() || static_cast<std::size_t>(k) > h.edge_count()) return std::nullopt;
  return search_berge_walk(h, WalkKind::cycle, k, allowed, Budget::unlimited()).witness;
}

// Is there an injective choice of covering hyperedges for the consecutive
// pairs of seq whose image contains every index in `required`?
inline bool covering_assignment(const Hypergraph& h, std::span<const VertexId> seq,
                                const std::vector<std::size_t>& required) {
  const std::size_t pairs = seq.size() - 1;
  if (required.size() > pairs) return false;
  std::vector<char> used(h.edge_count(), 0);
  std::vector<char> is_required(h.edge_count(), 0);
  for (std::size_t e : required) is_required[e] = 1;
  std::size_t required_left = required.size();
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (required_left > pairs - i) return false;
    if (i == pairs) return true;
    for (std::size_t e : h.incident(seq[i])) {
      if (used[e] || !h.edge(e).contains(seq[i + 1])) continue;
      used[e] = 1;
      required_left -= is_required[e];
      if (place(i + 1)) return true;
      required_left += is_required[e];
      used[e] = 0;
    }
    return false;
  };
  return place(0);
}

}  // namespace detail

/// In a Berge-P_{r+1}-free, Berge-C_{r+1}-free r-graph, the endpoints of every
/// Berge-P_r lie only in defining hyperedges. Checked per vertex sequence,
/// existentially over its hyperedge assignments.
inline LemmaReport check_endpoint_confinement(const Hypergraph& h) {
  LemmaReport rep;
  rep.lemma = LemmaId::endpoint_confinement;
  const int r = h.r();
  if (detail::has_path(h, r + 1)) {
    rep.detail = "contains a Berge path of length r + 1";
    return rep;
  }
  if (detail::cycle(h, r + 1)) {
    rep.detail = "contains a Berge cycle of length r + 1";
    return rep;
  }
  rep.precondition_ok = true;
  rep.holds = true;
  if (!detail::has_path(h, r)) {
    rep.detail = "no Berge path of length r; holds vacuously";
    return rep;
  }
  for_each_berge_path(h, r, [&](std::span<const VertexId> seq) {
    if (seq.front() > seq.back()) return true;  // the reversed sequence is checked instead
    const VertexId ends[2] = {seq.front(), seq.back()};
    auto required = incident_edge_indices(h, ends);
    if (!detail::covering_assignment(h, seq, required)) {
      rep.holds = false;
      rep.witness_sets.emplace_back(seq.begin(), seq.end());
      rep.detail = "an endpoint lies in a hyperedge outside every defining assignment";
      return false;
    }
    return true;
  });
  return rep;
}

/// A Berge-P_{r+1}-free, Berge-C_{r+1}-free r-graph containing a Berge-C_r has
/// r + 1 vertices T with |N_H(T)| <= r.
inline LemmaReport find_low_degree_cluster(const Hypergraph& h) {
  LemmaReport rep;
  rep.lemma = LemmaId::low_degree_cluster;
  const int r = h.r();
  if (detail::has_path(h, r + 1)) {
    rep.detail = "contains a Berge path of length r + 1";
    return rep;
  }
  if (detail::cycle(h, r + 1)) {
    rep.detail = "contains a Berge cycle of length r + 1";
    return rep;
  }
  auto cyc = detail::cycle(h, r);
  if (!cyc) {
    rep.detail = "contains no Berge cycle of length r";
    return rep;
  }
  rep.precondition_ok = true;
  rep.witness_walks.push_back(*cyc);
  detail::for_each_subset(h.n(), r + 1, [&](std::span<const VertexId> t) {
    if (detail::neighborhood_size(h, t) <= static_cast<std::size_t>(r)) {
      rep.holds = true;
      rep.alternatives.push_back(1);
      rep.witness_sets.emplace_back(t.begin(), t.end());
      return false;
    }
    return true;
  });
  if (!rep.holds) rep.detail = "no r + 1 vertices meet at most r hyperedges";
  return rep;
}

/// An r-graph with no Berge cycle of length >= r whose longest Berge path has
/// length exactly r has either (1) r - 1 vertices meeting at most one
/// hyperedge or (2) r + 1 vertices meeting at most r + 1 hyperedges.
inline LemmaReport find_small_neighborhood_set(const Hypergraph& h) {
  LemmaReport rep;
  rep.lemma = LemmaId::small_neighborhood;
  const int r = h.r();
  for (int len = r; len <= h.n(); ++len)
    if (auto c = detail::cycle(h, len)) {
      rep.detail = "contains a Berge cycle of length " + std::to_string(len);
      return rep;
    }
  if (!detail::has_path(h, r) || detail::has_path(h, r + 1)) {
    rep.detail = "longest Berge path length differs from r";
    return rep;
  }
  rep.precondition_ok = true;
  rep.ell = r;
  auto probe = [&](int size, std::size_t limit, int alternative) {
    detail::for_each_subset(h.n(), size, [&](std::span<const VertexId> s) {
      if (detail::neighborhood_size(h, s) <= limit) {
        rep.alternatives.push_back(alternative);
        rep.witness_sets.emplace_back(s.begin(), s.end());
        return false;
      }
      return true;
    });
  };
  probe(r - 1, 1, 1);
  probe(r + 1, static_cast<std::size_t>(r + 1), 2);
  rep.holds = !rep.alternatives.empty();
  if (!rep.holds) rep.detail = "neither small-neighborhood alternative found";
  return rep;
}

/// With longest Berge path length l > r, at least one of:
///   (1) a good 1-set and a good 2-set;
///   (2) a good 2-set and a good 3-set;
///   (3) the defining vertices of a Berge-P_l form a component containing a
///       Berge-C_{l+1}, or a Berge-C_l whose left-out vertex has degree 1.
inline LemmaReport check_good_set_disjunction(const Hypergraph& h, int ell) {
  LemmaReport rep;
  rep.lemma = LemmaId::good_set_disjunction;
  rep.ell = ell;
  const int r = h.r();
  if (ell <= r) {
    rep.detail = "longest Berge path length does not exceed r";
    return rep;
  }
  rep.precondition_ok = true;

  std::optional<std::vector<VertexId>> good[4];
  for (int s = 1; s <= 3; ++s)
    detail::for_each_subset(h.n(), s, [&](std::span<const VertexId> sub) {
      if (is_good_set(h, sub, ell).verdict == GoodVerdict::good) {
        good[s] = std::vector<VertexId>(sub.begin(), sub.end());
        return false;
      }
      return true;
    });
  if (good[1] && good[2]) {
    rep.alternatives.push_back(1);
    rep.witness_sets.push_back(*good[1]);
    rep.witness_sets.push_back(*good[2]);
  }
  if (good[2] && good[3]) {
    rep.alternatives.push_back(2);
    rep.witness_sets.push_back(*good[2]);
    rep.witness_sets.push_back(*good[3]);
  }

  for (const auto& comp : components(h)) {
    if (static_cast<int>(comp.size()) != ell + 1) continue;
    VertexMask scope = 0;
    for (VertexId v : comp) scope |= bit(v);
    if (!search_berge_walk(h, WalkKind::path, ell, scope, Budget::unlimited()).found()) continue;
    std::optional<BergeWitness> cyc = detail::cycle(h, ell + 1, scope);
    for (std::size_t i = 0; !cyc && i < comp.size(); ++i)
      if (h.degree(comp[i]) == 1) cyc = detail::cycle(h, ell, scope & ~bit(comp[i]));
    if (cyc) {
      rep.alternatives.push_back(3);
      rep.witness_sets.push_back(comp);
      rep.witness_walks.push_back(*cyc);
      break;
    }
  }
  rep.holds = !rep.alternatives.empty();

  const bool found_pair = good[2].has_value() && (good[1] || good[3]);
  if (found_pair && ell > r + 1 && h.n() - 2 <= ell - 1) {
    EdgeBoundCheck eb;
    eb.lhs = checked_mul(static_cast<Count>(r), h.edge_count());
    eb.rhs = checked_add(checked_add(checked_mul(static_cast<Count>(r), binom_s(ell - 1, r)), binom_s(ell - 1, r - 1)),
                         binom_s(ell, r - 1));
    eb.holds = eb.lhs <= eb.rhs;
    rep.edge_bound = eb;
  }
  if (!rep.holds) rep.detail = "no bullet verified";
  return rep;
}

inline LemmaReport check_good_set_disjunction(const Hypergraph& h) {
  return check_good_set_disjunction(h, longest_berge_path(h).length);
}

}  // namespace bergepath

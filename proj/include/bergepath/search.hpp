#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "bergepath/arith.hpp"
#include "bergepath/berge.hpp"
#include "bergepath/bnb.hpp"
#include "bergepath/budget.hpp"
#include "bergepath/error.hpp"
#include "bergepath/extremal.hpp"
#include "bergepath/graph.hpp"
#include "bergepath/hypergraph.hpp"

namespace bergepath {

enum class OracleStatus { proved, budget_exhausted };

inline std::string_view to_string(OracleStatus s) {
  return s == OracleStatus::proved ? "proved" : "budget_exhausted";
}

using OracleWitness = std::variant<Hypergraph, Graph, RedBlueGraph>;

struct OracleResult {
  TuranParams params;
  Count best_value = 0;
  OracleWitness witness;
  OracleStatus status = OracleStatus::budget_exhausted;
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};
  int threads = 1;
};

struct OracleOptions {
  Budget budget;
  int threads = 1;
  /// Start from the explicit construction (verified free before use) instead
  /// of the empty structure.
  bool seed_incumbent = true;
  /// Re-run the whole freeness search after each insertion instead of only
  /// the paths through the new edge. Test-only cross-check.
  bool full_recheck = false;
};

namespace detail {

inline constexpr Count kMaxCliqueSlots = 5'000'000;

/// Whether adding edges.back() to the (P_k-free) rest creates a Berge path of
/// length k. false also when the meter ran out; callers check the meter.
inline bool creates_path(int n, std::span<const VertexMask> edges, int k, bool full, BudgetMeter& meter) {
  if (k > n - 1 || edges.size() < static_cast<std::size_t>(k)) return false;
  BergeEngine engine(n, edges, meter);
  if (!full) return engine.path_through(edges.size() - 1, k);
  for (VertexId s = 0; s < static_cast<VertexId>(n); ++s) {
    if (engine.path_from(s, k)) return true;
    if (engine.aborted()) return false;
  }
  return false;
}

/// Include/exclude over the lexicographically ordered r-subsets.
class TuranProblem {
 public:
  using witness_type = Hypergraph;

  TuranProblem(const TuranParams& p, bool full_recheck)
      : n_(p.n()), r_(p.r()), k_(p.k()), full_(full_recheck), slots_(complete_hypergraph(p.n(), p.r()).edges()) {
    for (const auto& e : slots_) slot_masks_.push_back(e.mask());
  }

  std::size_t slot_count() const { return slots_.size(); }
  int choice_count(std::size_t) const { return 2; }

  bool apply(std::size_t slot, int choice, BudgetMeter& meter) {
    if (choice == 0) return true;
    current_.push_back(slot_masks_[slot]);
    chosen_.push_back(slot);
    if (creates_path(n_, current_, k_, full_, meter) || meter.exhausted()) {
      current_.pop_back();
      chosen_.pop_back();
      return false;
    }
    return true;
  }

  void undo(std::size_t, int choice) {
    if (choice == 0) return;
    current_.pop_back();
    chosen_.pop_back();
  }

  Count value() const { return current_.size(); }
  Count upper_bound(std::size_t slot) const { return value() + (slots_.size() - slot); }

  Hypergraph witness() const {
    std::vector<Hyperedge> edges;
    for (std::size_t s : chosen_) edges.push_back(slots_[s]);
    return Hypergraph(n_, r_, std::move(edges));
  }

 private:
  int n_, r_, k_;
  bool full_;
  std::vector<Hyperedge> slots_;
  std::vector<VertexMask> slot_masks_;
  std::vector<VertexMask> current_;
  std::vector<std::size_t> chosen_;
};

/// Shared state of the graph-pair searches: pair slots in lexicographic
/// order, the underlying edge set as 2-element masks for the path check, and
/// per r-set counters of present and blocked pairs.
class PairSlots {
 public:
  PairSlots(int n, int r, int k, bool full_recheck) : n_(n), r_(r), k_(k), full_(full_recheck) {
    if (n > kMaskVertices) throw error(errc::invalid_parameter, "graph oracles support at most 64 vertices");
    if (binom_s(n, r) > kMaxCliqueSlots) throw error(errc::invalid_parameter, "too many r-sets to track");
    std::vector<std::vector<int>> pair_id(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        pair_id[u][v] = static_cast<int>(pairs_.size());
        pairs_.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
      }
    sets_of_pair_.resize(pairs_.size());
    std::vector<VertexId> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = static_cast<VertexId>(i);
    if (r <= n) {
      for (const auto& set : complete_edges(all, r)) {
        const auto id = static_cast<int>(set_count_++);
        for (std::size_t i = 0; i < set.size(); ++i)
          for (std::size_t j = i + 1; j < set.size(); ++j)
            sets_of_pair_[static_cast<std::size_t>(pair_id[set[i]][set[j]])].push_back(id);
      }
    }
    present_.assign(set_count_, 0);
    blocked_.assign(set_count_, 0);
    pairs_per_set_ = r * (r - 1) / 2;
  }

  std::size_t slot_count() const { return pairs_.size(); }
  const GraphEdge& pair(std::size_t slot) const { return pairs_[slot]; }

  /// Adds the pair to the underlying graph; false (and no change) when a path
  /// with k edges appears.
  bool add_edge(std::size_t slot, BudgetMeter& meter) {
    auto [u, v] = pairs_[slot];
    current_.push_back(bit(u) | bit(v));
    if (creates_path(n_, current_, k_, full_, meter) || meter.exhausted()) {
      current_.pop_back();
      return false;
    }
    return true;
  }
  void remove_edge() { current_.pop_back(); }

  // A pair entering a clique candidate (+1) or leaving it (-1).
  void mark_present(std::size_t slot, int delta) {
    for (int s : sets_of_pair_[slot]) {
      auto& c = present_[static_cast<std::size_t>(s)];
      if (delta > 0 && ++c == pairs_per_set_) ++complete_;
      if (delta < 0 && c-- == pairs_per_set_) --complete_;
    }
  }
  void mark_blocked(std::size_t slot, int delta) {
    for (int s : sets_of_pair_[slot]) {
      auto& c = blocked_[static_cast<std::size_t>(s)];
      if (delta > 0 && c++ == 0) ++dead_;
      if (delta < 0 && --c == 0) --dead_;
    }
  }

  /// r-sets whose pairs are all present.
  Count complete() const { return complete_; }
  /// r-sets with no blocked pair.
  Count alive() const { return set_count_ - dead_; }
  int n() const { return n_; }
  int r() const { return r_; }

 private:
  int n_, r_, k_;
  bool full_;
  std::vector<GraphEdge> pairs_;
  std::vector<std::vector<int>> sets_of_pair_;
  std::size_t set_count_ = 0;
  int pairs_per_set_ = 1;
  std::vector<int> present_, blocked_;
  Count complete_ = 0, dead_ = 0;
  std::vector<VertexMask> current_;
};

/// Maximize the number of r-cliques over P_k-free graphs.
class CliqueProblem {
 public:
  using witness_type = Graph;

  CliqueProblem(const TuranParams& p, bool full_recheck) : slots_(p.n(), p.r(), p.k(), full_recheck) {}

  std::size_t slot_count() const { return slots_.slot_count(); }
  int choice_count(std::size_t) const { return 2; }

  bool apply(std::size_t slot, int choice, BudgetMeter& meter) {
    if (choice == 0) {
      slots_.mark_blocked(slot, +1);
      return true;
    }
    if (!slots_.add_edge(slot, meter)) return false;
    slots_.mark_present(slot, +1);
    chosen_.push_back(slot);
    return true;
  }

  void undo(std::size_t slot, int choice) {
    if (choice == 0) {
      slots_.mark_blocked(slot, -1);
      return;
    }
    slots_.remove_edge();
    slots_.mark_present(slot, -1);
    chosen_.pop_back();
  }

  Count value() const { return slots_.complete(); }
  Count upper_bound(std::size_t) const { return slots_.alive(); }

  Graph witness() const {
    std::vector<GraphEdge> edges;
    for (std::size_t s : chosen_) edges.push_back(slots_.pair(s));
    return Graph(slots_.n(), std::move(edges));
  }

 private:
  PairSlots slots_;
  std::vector<std::size_t> chosen_;
};

/// Maximize blue r-cliques + red edges over red-blue graphs with a P_k-free
/// underlying graph. Choices: 0 absent, 1 red, 2 blue.
class RedBlueProblem {
 public:
  using witness_type = RedBlueGraph;

  RedBlueProblem(const TuranParams& p, bool full_recheck)
      : slots_(p.n(), p.r(), p.k(), full_recheck),
        per_pair_(std::max<Count>(1, binom_s(p.n() - 2, p.r() - 2))) {}

  std::size_t slot_count() const { return slots_.slot_count(); }
  int choice_count(std::size_t) const { return 3; }

  bool apply(std::size_t slot, int choice, BudgetMeter& meter) {
    if (choice == 0) {
      slots_.mark_blocked(slot, +1);
      return true;
    }
    if (!slots_.add_edge(slot, meter)) return false;
    if (choice == 1) {
      slots_.mark_blocked(slot, +1);
      red_.push_back(slot);
    } else {
      slots_.mark_present(slot, +1);
      blue_.push_back(slot);
    }
    return true;
  }

  void undo(std::size_t slot, int choice) {
    if (choice == 0) {
      slots_.mark_blocked(slot, -1);
      return;
    }
    slots_.remove_edge();
    if (choice == 1) {
      slots_.mark_blocked(slot, -1);
      red_.pop_back();
    } else {
      slots_.mark_present(slot, -1);
      blue_.pop_back();
    }
  }

  Count value() const { return slots_.complete() + red_.size(); }

  Count upper_bound(std::size_t slot) const {
    const Count remaining = slots_.slot_count() - slot;
    const Count coarse = value() + remaining * per_pair_;
    const Count split = slots_.alive() + red_.size() + remaining;
    return std::min(coarse, split);
  }

  RedBlueGraph witness() const {
    std::vector<GraphEdge> red, blue;
    for (std::size_t s : red_) red.push_back(slots_.pair(s));
    for (std::size_t s : blue_) blue.push_back(slots_.pair(s));
    return RedBlueGraph(slots_.n(), std::move(red), std::move(blue));
  }

 private:
  PairSlots slots_;
  Count per_pair_;
  std::vector<std::size_t> red_, blue_;
};

template <class P>
OracleResult run_oracle(const TuranParams& params, P problem, Count seed_value, typename P::witness_type seed,
                        const OracleOptions& opts) {
  BnbOptions bnb;
  bnb.budget = opts.budget;
  bnb.threads = opts.threads;
  bnb.force_first_slot = true;
  auto res = branch_and_bound(std::move(problem), seed_value, std::move(seed), bnb);
  return OracleResult{params,
                      res.best_value,
                      std::move(res.witness),
                      res.complete ? OracleStatus::proved : OracleStatus::budget_exhausted,
                      res.nodes,
                      res.elapsed,
                      res.threads};
}

/// p disjoint copies of K_k and a K_q.
inline Graph clique_blocks(const TuranParams& p) {
  std::vector<GraphEdge> edges;
  for (int b = 0; b <= p.p(); ++b) {
    const int size = b < p.p() ? p.k() : p.q();
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j)
        edges.emplace_back(static_cast<VertexId>(b * p.k() + i), static_cast<VertexId>(b * p.k() + j));
  }
  return Graph(p.n(), std::move(edges));
}

}  // namespace detail

/// Maximum number of hyperedges in a Berge-P_k-free r-graph on n vertices,
/// by branch and bound. The first included hyperedge is fixed to {0..r-1}.
inline OracleResult turan_oracle(const TuranParams& p, const OracleOptions& opts = {}) {
  if (p.n() > kMaskVertices) throw error(errc::invalid_parameter, "turan_oracle supports at most 64 vertices");
  Hypergraph seed(p.n(), p.r(), {});
  if (opts.seed_incumbent) {
    if (turan_regime(p) == TuranRegime::large_k)
      seed = construct_extremal(p);
    else if (p.n() % (p.r() + 1) == 0)
      seed = construct_small_k(p);
    if (find_berge_path(seed, p.k())) throw std::logic_error("seed construction contains a Berge path");
  }
  const Count seed_value = seed.edge_count();
  return detail::run_oracle(p, detail::TuranProblem(p, opts.full_recheck), seed_value, std::move(seed), opts);
}

/// Maximum number of K_r over P_k-free graphs on n vertices.
inline OracleResult graph_kr_oracle(int n, int k, int r, const OracleOptions& opts = {}) {
  const TuranParams p(n, r, k);
  Graph seed(n, {});
  if (opts.seed_incumbent) {
    seed = detail::clique_blocks(p);
    if (!is_pk_free(seed, k)) throw std::logic_error("seed graph contains a path with k edges");
  }
  const Count seed_value = count_cliques(seed, r);
  return detail::run_oracle(p, detail::CliqueProblem(p, opts.full_recheck), seed_value, std::move(seed), opts);
}

/// Maximum of g = (blue r-cliques) + (red edges) over red-blue graphs on n
/// vertices whose underlying graph is P_k-free.
inline OracleResult redblue_g_oracle(int n, int k, int r, const OracleOptions& opts = {}) {
  const TuranParams p(n, r, k);
  RedBlueGraph seed(n, {}, {});
  if (opts.seed_incumbent && k >= r + 1) {
    seed = construct_redblue_extremal(p);
    if (!is_pk_free(seed.underlying(), k)) throw std::logic_error("seed graph contains a path with k edges");
  }
  const Count seed_value = g_value(seed, r);
  return detail::run_oracle(p, detail::RedBlueProblem(p, opts.full_recheck), seed_value, std::move(seed), opts);
}

enum class VerifyRegime { formula, cliques, redblue };

inline std::string_view to_string(VerifyRegime r) {
  switch (r) {
    case VerifyRegime::formula: return "formula";
    case VerifyRegime::cliques: return "cliques";
    case VerifyRegime::redblue: return "redblue";
  }
  return "unknown";
}

struct VerifyGrid {
  int r = 3;
  int k = 4;
  int n_min = 1;
  int n_max = 1;
};

struct VerifyCell {
  OracleResult oracle;
  Count formula_value = 0;
  /// Meaningful only for proved cells.
  bool match = false;
  /// The closed form is claimed for these parameters (see g_bound_in_proof_regime
  /// and outside_proven_range); a mismatch outside that range refutes the
  /// closed form rather than the oracle.
  bool formula_claimed = true;
};

enum class VerifyVerdict { pass, mismatch, inconclusive };

inline std::string_view to_string(VerifyVerdict v) {
  switch (v) {
    case VerifyVerdict::pass: return "pass";
    case VerifyVerdict::mismatch: return "mismatch";
    case VerifyVerdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

struct VerifyReport {
  VerifyRegime regime = VerifyRegime::formula;
  VerifyGrid grid;
  std::vector<VerifyCell> cells;
  VerifyVerdict verdict = VerifyVerdict::pass;
};

/// Runs the oracle of the regime on every n of the grid and compares with the
/// closed form: turan_formula, kr_count_bound, or g_upper_bound. Budgets
/// apply per cell.
inline VerifyReport verify_range(VerifyRegime regime, const VerifyGrid& grid, const OracleOptions& opts = {}) {
  VerifyReport rep{regime, grid, {}, VerifyVerdict::pass};
  bool inconclusive = false, mismatch = false;
  for (int n = grid.n_min; n <= grid.n_max; ++n) {
    const TuranParams p(n, grid.r, grid.k);
    Count formula = 0;
    bool claimed = true;
    switch (regime) {
      case VerifyRegime::formula:
        formula = turan_formula(p);
        claimed = !outside_proven_range(p);
        break;
      case VerifyRegime::cliques: formula = kr_count_bound(p); break;
      case VerifyRegime::redblue:
        formula = g_upper_bound(p);
        claimed = g_bound_in_proof_regime(p);
        break;
    }
    OracleResult res = regime == VerifyRegime::formula   ? turan_oracle(p, opts)
                       : regime == VerifyRegime::cliques ? graph_kr_oracle(n, grid.k, grid.r, opts)
                                                         : redblue_g_oracle(n, grid.k, grid.r, opts);
    VerifyCell cell{std::move(res), formula, false, claimed};
    if (cell.oracle.status == OracleStatus::proved) {
      cell.match = cell.oracle.best_value == formula;
      mismatch = mismatch || !cell.match;
    } else {
      inconclusive = true;
    }
    rep.cells.push_back(std::move(cell));
  }
  rep.verdict = mismatch ? VerifyVerdict::mismatch : inconclusive ? VerifyVerdict::inconclusive : VerifyVerdict::pass;
  return rep;
}

}  // namespace bergepath

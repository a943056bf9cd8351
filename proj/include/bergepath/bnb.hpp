#pragma once

#include <atomic>
#include <chrono>
#include <concepts>
#include <cstdint>
#include <mutex>
#include <thread>
#include <vector>

#include "bergepath/arith.hpp"
#include "bergepath/budget.hpp"

namespace bergepath {

/// A maximization over a fixed sequence of slots, each taking one of
/// choice_count(slot) values; choice 0 means "absent" and is always feasible.
/// apply() returns false (leaving the state untouched) when the choice creates
/// a forbidden structure; undo() reverts a successful apply(). Every state
/// reachable by successful applies is itself a feasible solution with value().
/// upper_bound(slot) bounds value() over all completions of the current state
/// when slots [0, slot) are decided.
template <class P>
concept BranchProblem = std::copy_constructible<P> &&
    requires(P& p, const P& cp, std::size_t slot, int choice, BudgetMeter& meter) {
      typename P::witness_type;
      { cp.slot_count() } -> std::convertible_to<std::size_t>;
      { cp.choice_count(slot) } -> std::convertible_to<int>;
      { p.apply(slot, choice, meter) } -> std::same_as<bool>;
      p.undo(slot, choice);
      { cp.value() } -> std::convertible_to<Count>;
      { cp.upper_bound(slot) } -> std::convertible_to<Count>;
      { cp.witness() } -> std::convertible_to<typename P::witness_type>;
    };

struct BnbOptions {
  Budget budget;
  /// 1 runs a plain depth-first search whose node count and witness are
  /// reproducible. More workers split the tree at split_depth.
  int threads = 1;
  std::size_t split_depth = 6;
  /// Skip choice 0 at slot 0. Only valid when every nonempty solution is
  /// equivalent to one using slot 0 and the empty solution is covered by the
  /// initial incumbent.
  bool force_first_slot = false;
};

template <class W>
struct BnbResult {
  Count best_value = 0;
  W witness;
  /// The whole tree was explored (modulo the sound cuts); best_value is the
  /// maximum.
  bool complete = false;
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};
  int threads = 1;
};

namespace detail {

template <BranchProblem P>
class BnbRun {
 public:
  using W = typename P::witness_type;

  BnbRun(const BnbOptions& opts, Count incumbent, W witness)
      : opts_(opts), start_(Clock::now()), best_(incumbent), witness_(std::move(witness)) {}

  BnbResult<W> run(P root) {
    const int workers = std::max(1, opts_.threads);
    bool aborted = false;
    std::uint64_t nodes = 0;
    if (workers == 1) {
      BudgetMeter meter(opts_.budget, start_);
      dfs(root, 0, meter);
      aborted = meter.exhausted();
      nodes = meter.nodes();
    } else {
      std::tie(aborted, nodes) = run_parallel(std::move(root), workers);
    }
    BnbResult<W> out{best_.load(), std::move(witness_), !aborted, nodes, elapsed(), workers};
    return out;
  }

 private:
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
  }

  void offer(const P& p) {
    const Count v = p.value();
    if (v <= best_.load(std::memory_order_relaxed)) return;
    std::lock_guard lock(mutex_);
    if (v <= best_.load()) return;
    witness_ = p.witness();
    best_.store(v);
  }

  int first_choice(std::size_t slot) const { return slot == 0 && opts_.force_first_slot ? 1 : 0; }

  void dfs(P& p, std::size_t slot, BudgetMeter& meter) {
    if (!meter.tick()) return;
    offer(p);
    if (slot == p.slot_count()) return;
    if (p.upper_bound(slot) <= best_.load(std::memory_order_relaxed)) return;
    for (int c = p.choice_count(slot) - 1; c >= first_choice(slot); --c) {
      if (p.apply(slot, c, meter)) {
        dfs(p, slot + 1, meter);
        p.undo(slot, c);
      }
      if (meter.exhausted()) return;
    }
  }

  // Prefixes of length split_depth (or shorter leaves), in depth-first order.
  void collect(P& p, std::size_t slot, std::vector<int>& prefix, std::vector<std::vector<int>>& tasks,
               BudgetMeter& meter) {
    if (slot == opts_.split_depth || slot == p.slot_count()) {
      tasks.push_back(prefix);
      return;
    }
    if (!meter.tick()) return;
    offer(p);
    if (p.upper_bound(slot) <= best_.load()) return;
    for (int c = p.choice_count(slot) - 1; c >= first_choice(slot); --c) {
      if (p.apply(slot, c, meter)) {
        prefix.push_back(c);
        collect(p, slot + 1, prefix, tasks, meter);
        prefix.pop_back();
        p.undo(slot, c);
      }
      if (meter.exhausted()) return;
    }
  }

  std::pair<bool, std::uint64_t> run_parallel(P root, int workers) {
    std::atomic<std::uint64_t> shared{0};
    std::vector<std::vector<int>> tasks;
    {
      BudgetMeter meter(opts_.budget, start_, &shared);
      std::vector<int> prefix;
      P scratch = root;
      collect(scratch, 0, prefix, tasks, meter);
      meter.flush();
      if (meter.exhausted()) return {true, shared.load()};
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> aborted{false};
    auto work = [&] {
      BudgetMeter meter(opts_.budget, start_, &shared);
      while (!aborted.load()) {
        const std::size_t t = next.fetch_add(1);
        if (t >= tasks.size()) break;
        P p = root;
        bool ok = true;
        for (std::size_t s = 0; s < tasks[t].size() && ok; ++s) ok = p.apply(s, tasks[t][s], meter);
        if (ok) dfs(p, tasks[t].size(), meter);
        if (meter.exhausted()) aborted.store(true);
      }
      meter.flush();
      if (meter.exhausted()) aborted.store(true);
    };
    std::vector<std::jthread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    pool.clear();
    return {aborted.load(), shared.load()};
  }

  BnbOptions opts_;
  Clock::time_point start_;
  std::atomic<Count> best_;
  std::mutex mutex_;
  W witness_;
};

}  // namespace detail

/// Depth-first branch and bound seeded with a known feasible solution.
template <BranchProblem P>
BnbResult<typename P::witness_type> branch_and_bound(P root, Count incumbent, typename P::witness_type incumbent_witness,
                                                     const BnbOptions& opts = {}) {
  detail::BnbRun<P> run(opts, incumbent, std::move(incumbent_witness));
  return run.run(std::move(root));
}

}  // namespace bergepath

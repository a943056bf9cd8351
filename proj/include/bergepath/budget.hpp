#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>

namespace bergepath {

using Clock = std::chrono::steady_clock;

/// Node and wall-clock limits for exponential searches; whichever trips first
/// ends the search with a budget-exhausted verdict.
struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  std::chrono::milliseconds max_time{60'000};
  /// Cooperative cancellation, polled at node boundaries.
  const std::atomic<bool>* cancel = nullptr;

  static Budget unlimited() {
    return Budget{std::numeric_limits<std::uint64_t>::max(), std::chrono::milliseconds::max(), nullptr};
  }
};

enum class SearchStatus { found, not_found, budget_exhausted };

/// Counts nodes against a Budget. Several meters may share one atomic total
/// (parallel workers); the limit then applies to the sum.
class BudgetMeter {
 public:
  explicit BudgetMeter(const Budget& budget, Clock::time_point start = Clock::now(),
                       std::atomic<std::uint64_t>* shared_nodes = nullptr)
      : budget_(budget), start_(start), shared_(shared_nodes) {}

  /// Accounts one node; false once the budget is spent.
  bool tick() {
    if (exhausted_) return false;
    ++nodes_;
    if (shared_) {
      if (++unflushed_ == kFlush) flush();
    } else if (nodes_ > budget_.max_nodes) {
      exhausted_ = true;
      return false;
    }
    if ((nodes_ & 1023u) == 1) poll();
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

  void flush() {
    if (!shared_) return;
    auto total = shared_->fetch_add(unflushed_) + unflushed_;
    unflushed_ = 0;
    if (total > budget_.max_nodes) exhausted_ = true;
  }

  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
  }

 private:
  static constexpr std::uint64_t kFlush = 256;

  void poll() {
    if (budget_.cancel && budget_.cancel->load(std::memory_order_relaxed)) exhausted_ = true;
    if (budget_.max_time != std::chrono::milliseconds::max() && elapsed() > budget_.max_time) exhausted_ = true;
  }

  Budget budget_;
  Clock::time_point start_;
  std::atomic<std::uint64_t>* shared_;
  std::uint64_t nodes_ = 0;
  std::uint64_t unflushed_ = 0;
  bool exhausted_ = false;
};

}  // namespace bergepath

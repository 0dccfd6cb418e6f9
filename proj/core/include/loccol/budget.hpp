#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace loccol {

/// Wall-clock and node limits for exact searches. Unset means unlimited.
struct Budget {
  std::optional<std::chrono::milliseconds> time;
  std::optional<std::uint64_t> nodes;

  static Budget unlimited() { return {}; }
  static Budget millis(long long ms) { return Budget{std::chrono::milliseconds(ms), {}}; }
};

/// Counts search nodes against a Budget. The clock is sampled every 1024
/// nodes.
class BudgetMeter {
 public:
  explicit BudgetMeter(const Budget& budget);

  /// Records one node; returns false once the budget is spent (and keeps
  /// returning false).
  bool tick();
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  std::chrono::milliseconds elapsed() const;

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace loccol

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qslab/cost_model.hpp"

namespace qslab {

using SiteCounts = std::array<std::uint64_t, kNumCompareSites>;

/// Exact cost counters for one array. Comparisons are attributed to the
/// code site that performed them; the total always equals the site sum.
struct CostLedger {
  std::uint64_t comparisons = 0;
  std::uint64_t swaps = 0;
  SiteCounts site_hits{};

  void reset() { *this = CostLedger{}; }

  std::uint64_t site_total() const {
    std::uint64_t t = 0;
    for (auto h : site_hits) t += h;
    return t;
  }
};

/// A key sequence plus its cost ledger; the only lens through which the
/// instrumented algorithms touch data. Keys are the distinct integers
/// 1..n. Internally 1-based: slot 0 holds the rank-0 sentinel the classic
/// scan relies on, and all reported positions are 1-based.
///
/// Counters are plain fields: one array has one writer at a time. Distinct
/// arrays can be sorted concurrently.
class TrackedArray {
 public:
  TrackedArray() : slots_(1, 0) {}

  /// Validates that `keys` is a permutation of 1..n. Duplicate keys are a
  /// distinct-keys violation; any other deviation from {1..n} is rejected
  /// with a message naming the offending value.
  static TrackedArray from_keys(const std::vector<int>& keys);

  int size() const { return static_cast<int>(slots_.size()) - 1; }
  std::span<const int> keys() const { return {slots_.data() + 1, slots_.size() - 1}; }
  int key_at(int pos) const { return slots_.at(static_cast<std::size_t>(pos)); }

  const CostLedger& ledger() const { return ledger_; }
  void reset_ledger() { ledger_.reset(); }

  bool is_sorted() const;

  // Mutable access for the sorting engine.
  std::vector<int>& slots() { return slots_; }
  const std::vector<int>& slots() const { return slots_; }
  CostLedger& ledger_mut() { return ledger_; }

 private:
  std::vector<int> slots_;
  CostLedger ledger_;
};

/// Record of one partitioning step.
struct PartitionTrace {
  AlgorithmId alg{};
  int left = 0, right = 0;       // 1-based range the step covered
  int small_pivot = 0;           // p; equals large_pivot for the classic variant
  int large_pivot = 0;           // q
  int small_pivot_pos = 0;       // final position of p
  int large_pivot_pos = 0;       // final position of q
  bool case_two = false;         // Yaroslavskiy main loop left with k = g+2
  int exit_k = 0, exit_g = 0, exit_l = 0;  // pointer values at loop exit,
                                           // before the post-loop adjustment
  std::uint64_t comparisons = 0;           // costs of this step alone
  std::uint64_t swaps = 0;
  SiteCounts site_hits{};
  std::string snapshot;  // classes over [left..right]: s/p/m/q/l
};

/// Class string of the subrange: 's' below p, 'p'/'q' the pivots, 'm'
/// between, 'l' above q. For the classic variant p == q and the middle
/// class does not occur.
std::string classify_range(std::span<const int> keys, int small_pivot, int large_pivot);

}  // namespace qslab

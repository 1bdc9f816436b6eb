#pragma once

// Internal partitioning/sorting engine shared by the public instrumented
// API, the enumeration oracle, the Monte Carlo estimator and the timing
// harness. Arrays are passed as "slots": a vector whose element 0 holds the
// rank-0 sentinel and whose elements 1..n hold the keys. All index
// arithmetic is 1-based to match the reported traces.
//
// The counter is a template policy so the timing harness can instantiate
// the exact same control flow with counting compiled out entirely.

#include <cassert>
#include <utility>
#include <vector>

#include "qslab/cost_model.hpp"
#include "qslab/instrument.hpp"

namespace qslab::engine {

struct LedgerCounter {
  static constexpr bool counting = true;
  CostLedger* led;
  bool comparison(CompareSite s, bool outcome) {
    ++led->comparisons;
    ++led->site_hits[static_cast<std::size_t>(s)];
    return outcome;
  }
  void swaps(unsigned w) { led->swaps += w; }
};

struct NullCounter {
  static constexpr bool counting = false;
  bool comparison(CompareSite, bool outcome) { return outcome; }
  void swaps(unsigned) {}
};
static_assert(sizeof(NullCounter) == 1, "uncounted path must carry no state");

/// Result of one partitioning step, before any recursion.
struct StepResult {
  int small_pos = 0;  // final position of the small pivot (the only pivot
  int large_pos = 0;  // for the classic variant, where small_pos == large_pos)
  bool case_two = false;
  int exit_k = 0, exit_g = 0, exit_l = 0;
};

// Classic single-pivot crossing-pointers partition. Relies on slots[0]
// being smaller than every key when the range touches the array start.
// The final pivot transposition is not part of the swap measure; only
// crossing exchanges count (the established cost model for this variant).
template <class Counter>
StepResult classic_partition(std::vector<int>& a, int left, int right, Counter& cnt) {
  const int p = a[static_cast<std::size_t>(right)];
  int i = left - 1;
  int j = right;
  for (;;) {
    for (;;) {
      ++i;
      if (!cnt.comparison(CompareSite::ClassicScanLt, a[static_cast<std::size_t>(i)] < p)) break;
    }
    for (;;) {
      --j;
      if (!cnt.comparison(CompareSite::ClassicScanGt, a[static_cast<std::size_t>(j)] > p)) break;
    }
    if (j > i) {
      std::swap(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)]);
      cnt.swaps(1);
    }
    if (!(j > i)) break;
  }
  std::swap(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(right)]);
  StepResult r;
  r.small_pos = r.large_pos = i;
  return r;
}

// Sedgewick's dual-pivot partition. The end slots act as holes: the pivot
// values live in locals until the final placement, while misplaced elements
// are shifted outward one at a time. Swap weights: pivot ordering 1, each
// hole shift 1, the pointer-crossing block 2, the final placement 2.
template <class Counter>
StepResult sedgewick_partition(std::vector<int>& a, int left, int right, Counter& cnt) {
  int i = left, i1 = left, j = right, j1 = right;
  int p = a[static_cast<std::size_t>(left)];
  int q = a[static_cast<std::size_t>(right)];
  if (cnt.comparison(CompareSite::SedPivotOrder, p > q)) {
    std::swap(p, q);
    cnt.swaps(1);
  }
  for (;;) {
    ++i;
    bool crossed = false;
    for (;;) {
      if (!cnt.comparison(CompareSite::SedScanILeQ, a[static_cast<std::size_t>(i)] <= q)) break;
      if (i >= j) {
        crossed = true;
        break;
      }
      if (cnt.comparison(CompareSite::SedILtP, a[static_cast<std::size_t>(i)] < p)) {
        a[static_cast<std::size_t>(i1)] = a[static_cast<std::size_t>(i)];
        ++i1;
        a[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i1)];
        cnt.swaps(1);
      }
      ++i;
    }
    if (crossed) break;
    --j;
    for (;;) {
      if (!cnt.comparison(CompareSite::SedScanJGeP, a[static_cast<std::size_t>(j)] >= p)) break;
      if (cnt.comparison(CompareSite::SedJGtQ, a[static_cast<std::size_t>(j)] > q)) {
        a[static_cast<std::size_t>(j1)] = a[static_cast<std::size_t>(j)];
        --j1;
        a[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j1)];
        cnt.swaps(1);
      }
      if (i >= j) {
        crossed = true;
        break;
      }
      --j;
    }
    if (crossed) break;
    a[static_cast<std::size_t>(i1)] = a[static_cast<std::size_t>(j)];
    a[static_cast<std::size_t>(j1)] = a[static_cast<std::size_t>(i)];
    ++i1;
    --j1;
    a[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i1)];
    a[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j1)];
    cnt.swaps(2);
  }
  a[static_cast<std::size_t>(i1)] = p;
  a[static_cast<std::size_t>(j1)] = q;
  cnt.swaps(2);
  StepResult r;
  r.small_pos = i1;
  r.large_pos = j1;
  return r;
}

// Yaroslavskiy's dual-pivot partition. In the g-scan the key test A[g] > q
// executes first on every evaluation of the loop condition, so it counts
// once per evaluation; the k < g part is pointer arithmetic and free.
template <class Counter>
StepResult yaroslavskiy_partition(std::vector<int>& a, int left, int right, Counter& cnt) {
  int p = a[static_cast<std::size_t>(left)];
  int q = a[static_cast<std::size_t>(right)];
  if (cnt.comparison(CompareSite::YarPivotOrder, p > q)) {
    std::swap(a[static_cast<std::size_t>(left)], a[static_cast<std::size_t>(right)]);
    std::swap(p, q);
    cnt.swaps(1);
  }
  int l = left + 1;
  int g = right - 1;
  int k = l;
  while (k <= g) {
    if (cnt.comparison(CompareSite::YarKLtP, a[static_cast<std::size_t>(k)] < p)) {
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(l)]);
      cnt.swaps(1);
      ++l;
    } else if (cnt.comparison(CompareSite::YarKGtQ, a[static_cast<std::size_t>(k)] > q)) {
      while (cnt.comparison(CompareSite::YarGGtQ, a[static_cast<std::size_t>(g)] > q) && k < g) --g;
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(g)]);
      cnt.swaps(1);
      --g;
      if (cnt.comparison(CompareSite::YarKSwappedLtP, a[static_cast<std::size_t>(k)] < p)) {
        std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(l)]);
        cnt.swaps(1);
        ++l;
      }
    }
    ++k;
  }
  StepResult r;
  r.exit_k = k;
  r.exit_g = g;
  r.exit_l = l;
  r.case_two = (k == g + 2);
  assert(k == g + 1 || k == g + 2);
  --l;
  ++g;
  std::swap(a[static_cast<std::size_t>(left)], a[static_cast<std::size_t>(l)]);
  cnt.swaps(1);
  std::swap(a[static_cast<std::size_t>(right)], a[static_cast<std::size_t>(g)]);
  cnt.swaps(1);
  r.small_pos = l;
  r.large_pos = g;
  return r;
}

template <class Counter>
StepResult partition_dispatch(AlgorithmId alg, std::vector<int>& a, int left, int right,
                              Counter& cnt) {
  switch (alg) {
    case AlgorithmId::Classic: return classic_partition(a, left, right, cnt);
    case AlgorithmId::SedgewickDual: return sedgewick_partition(a, left, right, cnt);
    case AlgorithmId::YaroslavskiyDual: return yaroslavskiy_partition(a, left, right, cnt);
  }
  return {};
}

struct NullSink {
  void step(int, int, const StepResult&) {}
};

// Full recursive sort; subfiles of length <= 1 are skipped.
template <class Counter, class Sink>
void sort_range(AlgorithmId alg, std::vector<int>& a, int left, int right, Counter& cnt,
                Sink& sink) {
  if (right - left < 1) return;
  const StepResult r = partition_dispatch(alg, a, left, right, cnt);
  sink.step(left, right, r);
  if (alg == AlgorithmId::Classic) {
    sort_range(alg, a, left, r.small_pos - 1, cnt, sink);
    sort_range(alg, a, r.small_pos + 1, right, cnt, sink);
  } else {
    sort_range(alg, a, left, r.small_pos - 1, cnt, sink);
    sort_range(alg, a, r.small_pos + 1, r.large_pos - 1, cnt, sink);
    sort_range(alg, a, r.large_pos + 1, right, cnt, sink);
  }
}

}  // namespace qslab::engine

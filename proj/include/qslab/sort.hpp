#pragma once

#include <vector>

#include "qslab/instrument.hpp"

namespace qslab {

/// Sorts the array in place with full instrumentation. The ledger keeps
/// accumulating across calls; reset it first if a fresh count is wanted.
void sort(AlgorithmId alg, TrackedArray& arr);

/// Like sort(), but records one PartitionTrace per partitioning step (in
/// execution order) so step costs can be checked against the ledger total.
std::vector<PartitionTrace> sort_with_traces(AlgorithmId alg, TrackedArray& arr);

/// Runs a single partitioning step on [left, right] (1-based, inclusive)
/// and reports what happened. Requires right - left >= 1. The classic
/// variant's right-to-left scan may read below `left`; it stops at the
/// rank-0 sentinel at worst, exactly as inside a full sort, where every
/// key below `left` is a lower bound for the range.
PartitionTrace partition_step(AlgorithmId alg, TrackedArray& arr, int left, int right);

/// Uninstrumented sort for timing: no ledger exists on this path, so by
/// construction it performs zero counter updates. `slots` uses the same
/// layout as TrackedArray: slots[0] is the rank-0 sentinel, keys at 1..n.
void sort_slots_uncounted(AlgorithmId alg, std::vector<int>& slots);

}  // namespace qslab

#include "qslab/sort.hpp"

#include <stdexcept>

#include "sort_engine.hpp"

namespace qslab {

namespace {

PartitionTrace make_trace(AlgorithmId alg, const TrackedArray& arr, int left, int right,
                          const engine::StepResult& r, const CostLedger& before) {
  PartitionTrace t;
  t.alg = alg;
  t.left = left;
  t.right = right;
  t.small_pivot = arr.key_at(r.small_pos);
  t.large_pivot = arr.key_at(r.large_pos);
  t.small_pivot_pos = r.small_pos;
  t.large_pivot_pos = r.large_pos;
  t.case_two = r.case_two;
  t.exit_k = r.exit_k;
  t.exit_g = r.exit_g;
  t.exit_l = r.exit_l;
  const CostLedger& led = arr.ledger();
  t.comparisons = led.comparisons - before.comparisons;
  t.swaps = led.swaps - before.swaps;
  for (std::size_t i = 0; i < t.site_hits.size(); ++i)
    t.site_hits[i] = led.site_hits[i] - before.site_hits[i];
  t.snapshot = classify_range(arr.keys().subspan(static_cast<std::size_t>(left) - 1,
                                                 static_cast<std::size_t>(right - left) + 1),
                              t.small_pivot, t.large_pivot);
  return t;
}

struct TraceSink {
  AlgorithmId alg;
  TrackedArray* arr;
  std::vector<PartitionTrace>* out;
  CostLedger before;

  void step(int left, int right, const engine::StepResult& r) {
    out->push_back(make_trace(alg, *arr, left, right, r, before));
    before = arr->ledger();
  }
};

void check_partition_range(const TrackedArray& arr, int left, int right) {
  if (left < 1 || right > arr.size() || right - left < 1)
    throw std::domain_error("partition step needs 1 <= left < right <= n with at least 2 keys");
}

}  // namespace

void sort(AlgorithmId alg, TrackedArray& arr) {
  engine::LedgerCounter cnt{&arr.ledger_mut()};
  engine::NullSink sink;
  engine::sort_range(alg, arr.slots(), 1, arr.size(), cnt, sink);
}

std::vector<PartitionTrace> sort_with_traces(AlgorithmId alg, TrackedArray& arr) {
  std::vector<PartitionTrace> traces;
  engine::LedgerCounter cnt{&arr.ledger_mut()};
  TraceSink sink{alg, &arr, &traces, arr.ledger()};
  engine::sort_range(alg, arr.slots(), 1, arr.size(), cnt, sink);
  return traces;
}

PartitionTrace partition_step(AlgorithmId alg, TrackedArray& arr, int left, int right) {
  check_partition_range(arr, left, right);
  const CostLedger before = arr.ledger();
  engine::LedgerCounter cnt{&arr.ledger_mut()};
  const engine::StepResult r = engine::partition_dispatch(alg, arr.slots(), left, right, cnt);
  return make_trace(alg, arr, left, right, r, before);
}

void sort_slots_uncounted(AlgorithmId alg, std::vector<int>& slots) {
  engine::NullCounter cnt;
  engine::NullSink sink;
  engine::sort_range(alg, slots, 1, static_cast<int>(slots.size()) - 1, cnt, sink);
}

}  // namespace qslab

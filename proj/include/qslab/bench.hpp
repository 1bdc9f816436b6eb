#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qslab/cost_model.hpp"

namespace qslab::bench {

/// Wall-clock timing of one (algorithm, size) grid cell.
struct BenchPoint {
  AlgorithmId alg{};
  int n = 0;
  int repetitions = 0;       // counted repetitions (warm-up excluded)
  double mean_seconds = 0.0;
  double min_seconds = 0.0;
  std::uint64_t seed = 0;
};

struct GridConfig {
  std::vector<AlgorithmId> algs;
  std::vector<int> sizes;
  int repetitions = 1000;
  int warmup = 10;  // discarded leading repetitions per grid cell
  std::uint64_t seed = 1;
};

/// Returns the permutation sorted in repetition `rep` of size-n cells.
/// Input generation depends only on (seed, n, rep), so every algorithm
/// sorts identical inputs.
std::vector<int> grid_input(std::uint64_t seed, int n, int rep);

/// Times `repetitions` uninstrumented sorts per (alg, n) cell, strictly
/// sequentially. Permutation generation happens outside the timed section.
/// Every timed sort is followed by a correctness self-check; a failure
/// aborts the run.
std::vector<BenchPoint> run_grid(const GridConfig& config);

/// CSV schema: header `alg,n,repetitions,mean_ns,min_ns,seed`, one row per
/// point, times as decimal integer nanoseconds, LF line endings.
void write_csv(std::ostream& out, std::span<const BenchPoint> points);

}  // namespace qslab::bench

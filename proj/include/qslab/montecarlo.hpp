#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qslab/cost_model.hpp"

namespace qslab::montecarlo {

/// Cost estimate from `trials` independent uniform random permutations.
/// Identical (alg, kind, n, trials, seed) always yields a bit-identical
/// estimate, regardless of thread count: per-trial RNG streams are derived
/// from (seed, trial index) and the moments are accumulated as exact
/// integers before any floating-point division.
struct SampleEstimate {
  AlgorithmId alg{};
  CostKind kind{};
  int n = 0;
  long trials = 0;
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(trials)
  std::uint64_t seed = 0;
};

/// SplitMix64 finalizer; the documented mixing function behind all seed
/// derivation in this project.
std::uint64_t mix64(std::uint64_t x);

/// Deterministic per-stream seed for (seed, index).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform draw from [0, bound) by rejection, free of modulo bias.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform random permutation of {1..n} via a decrementing-index
/// Fisher-Yates shuffle. Deterministic given the generator state.
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

/// Runs `trials` instrumented sorts on fresh uniform permutations.
/// Requires trials >= 2 and n >= 2.
SampleEstimate estimate(AlgorithmId alg, CostKind kind, int n, long trials, std::uint64_t seed,
                        int threads = 1);

}  // namespace qslab::montecarlo

#include "qslab/bench.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qslab/montecarlo.hpp"
#include "sort_engine.hpp"

namespace qslab::bench {

namespace {

using Clock = std::chrono::steady_clock;

// The timed path must not count anything; keep it pinned to the stateless
// counter so a ledger cannot sneak in.
static_assert(!engine::NullCounter::counting);

std::mt19937_64 cell_rng(std::uint64_t seed, int n, int rep) {
  return std::mt19937_64(montecarlo::stream_seed(
      montecarlo::stream_seed(seed, static_cast<std::uint64_t>(n)),
      static_cast<std::uint64_t>(rep)));
}

void fill_cell_input(std::vector<int>& slots, std::uint64_t seed, int n, int rep) {
  auto rng = cell_rng(seed, n, rep);
  slots[0] = 0;
  const auto perm = montecarlo::random_permutation(n, rng);
  std::copy(perm.begin(), perm.end(), slots.begin() + 1);
}

void check_sorted(const std::vector<int>& slots, AlgorithmId alg, int n) {
  for (int i = 1; i <= n; ++i)
    if (slots[static_cast<std::size_t>(i)] != i)
      throw std::runtime_error(std::string("bench self-check failed: ") + algorithm_name(alg) +
                               " did not sort n=" + std::to_string(n));
}

}  // namespace

std::vector<int> grid_input(std::uint64_t seed, int n, int rep) {
  auto rng = cell_rng(seed, n, rep);
  return montecarlo::random_permutation(n, rng);
}

std::vector<BenchPoint> run_grid(const GridConfig& config) {
  if (config.sizes.empty()) throw std::domain_error("bench grid needs at least one size");
  if (config.repetitions < 1) throw std::domain_error("bench grid needs repetitions >= 1");
  std::vector<BenchPoint> points;
  engine::NullCounter cnt;
  engine::NullSink sink;
  for (const AlgorithmId alg : config.algs) {
    for (const int n : config.sizes) {
      if (n < 0) throw std::domain_error("bench grid sizes must be >= 0");
      std::vector<int> slots(static_cast<std::size_t>(n) + 1, 0);
      double total = 0.0;
      double best = std::numeric_limits<double>::infinity();
      for (int rep = -config.warmup; rep < config.repetitions; ++rep) {
        fill_cell_input(slots, config.seed, n, rep < 0 ? rep + config.warmup : rep);
        const auto start = Clock::now();
        engine::sort_range(alg, slots, 1, n, cnt, sink);
        const auto stop = Clock::now();
        check_sorted(slots, alg, n);
        if (rep < 0) continue;  // warm-up, discarded
        const double secs = std::chrono::duration<double>(stop - start).count();
        total += secs;
        best = std::min(best, secs);
      }
      points.push_back({alg, n, config.repetitions, total / config.repetitions,
                        config.repetitions > 0 ? best : 0.0, config.seed});
    }
  }
  return points;
}

void write_csv(std::ostream& out, std::span<const BenchPoint> points) {
  out << "alg,n,repetitions,mean_ns,min_ns,seed\n";
  for (const auto& p : points) {
    out << algorithm_name(p.alg) << ',' << p.n << ',' << p.repetitions << ','
        << std::llround(p.mean_seconds * 1e9) << ',' << std::llround(p.min_seconds * 1e9) << ','
        << p.seed << '\n';
  }
}

}  // namespace qslab::bench

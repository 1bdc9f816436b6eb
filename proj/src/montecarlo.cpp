#include "qslab/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "sort_engine.hpp"

namespace qslab::montecarlo {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ mix64(index + 1));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = n - 1; i >= 1; --i) {
    const auto j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  return perm;
}

namespace {

struct Moments {
  std::uint64_t sum = 0;
  unsigned __int128 sum_sq = 0;
};

// Shuffles directly into the slot buffer (slots[0] stays 0).
void fill_random_permutation(std::vector<int>& slots, std::mt19937_64& rng) {
  const int n = static_cast<int>(slots.size()) - 1;
  std::iota(slots.begin() + 1, slots.end(), 1);
  for (int i = n; i >= 2; --i) {
    const auto j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i)));
    std::swap(slots[static_cast<std::size_t>(i)], slots[static_cast<std::size_t>(j) + 1]);
  }
}

Moments run_trials(AlgorithmId alg, CostKind kind, int n, long first, long last,
                   std::uint64_t seed) {
  Moments m;
  std::vector<int> slots(static_cast<std::size_t>(n) + 1, 0);
  CostLedger led;
  engine::LedgerCounter cnt{&led};
  engine::NullSink sink;
  for (long t = first; t < last; ++t) {
    std::mt19937_64 rng(stream_seed(seed, static_cast<std::uint64_t>(t)));
    fill_random_permutation(slots, rng);
    led.reset();
    engine::sort_range(alg, slots, 1, n, cnt, sink);
    const std::uint64_t x = kind == CostKind::Comparisons ? led.comparisons : led.swaps;
    m.sum += x;
    m.sum_sq += static_cast<unsigned __int128>(x) * x;
  }
  return m;
}

}  // namespace

SampleEstimate estimate(AlgorithmId alg, CostKind kind, int n, long trials, std::uint64_t seed,
                        int threads) {
  if (trials < 2) throw std::domain_error("estimate needs trials >= 2");
  if (n < 2) throw std::domain_error("estimate needs n >= 2");
  if (threads < 1) threads = 1;

  Moments total;
  if (threads == 1) {
    total = run_trials(alg, kind, n, 0, trials, seed);
  } else {
    std::vector<Moments> parts(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    const long chunk = (trials + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const long first = static_cast<long>(t) * chunk;
      const long last = std::min(trials, first + chunk);
      if (first >= last) break;
      pool.emplace_back([&, t, first, last] {
        parts[static_cast<std::size_t>(t)] = run_trials(alg, kind, n, first, last, seed);
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& p : parts) {
      total.sum += p.sum;
      total.sum_sq += p.sum_sq;
    }
  }

  SampleEstimate est;
  est.alg = alg;
  est.kind = kind;
  est.n = n;
  est.trials = trials;
  est.seed = seed;
  const auto tr = static_cast<long double>(trials);
  const auto sum = static_cast<long double>(total.sum);
  const auto sum_sq = static_cast<long double>(total.sum_sq);
  est.mean = static_cast<double>(sum / tr);
  const long double variance = (sum_sq - sum * sum / tr) / (tr - 1.0L);
  est.std_error = static_cast<double>(std::sqrt(std::max(variance, 0.0L) / tr));
  return est;
}

}  // namespace qslab::montecarlo

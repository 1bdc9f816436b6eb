#include "qslab/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sort_engine.hpp"

namespace qslab::oracle {

namespace {

void check_cap(const char* op, int n, int lo, int cap) {
  if (n < lo)
    throw std::domain_error(std::string(op) + " needs n >= " + std::to_string(lo));
  if (n > cap)
    throw std::domain_error(std::string(op) + ": n = " + std::to_string(n) +
                            " exceeds the enumeration cap " + std::to_string(cap));
}

// Runs fn(perm) for every permutation of {1..n} in lexicographic order.
template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    fn(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::pair<int, int> pivot_set(AlgorithmId alg, const std::vector<int>& perm) {
  if (alg == AlgorithmId::Classic) {
    const int p = perm.back();
    return {p, p};
  }
  const auto [lo, hi] = std::minmax(perm.front(), perm.back());
  return {lo, hi};
}

struct PivotAccumulator {
  std::uint64_t cost_sum = 0;
  std::uint64_t count = 0;
};

EnumerationReport run_enumeration(AlgorithmId alg, CostKind kind, int n, bool full_sort) {
  std::map<std::pair<int, int>, PivotAccumulator> acc;
  std::uint64_t total = 0;
  std::vector<int> slots(static_cast<std::size_t>(n) + 1);
  CostLedger led;
  engine::LedgerCounter cnt{&led};
  engine::NullSink sink;
  for_each_permutation(n, [&](const std::vector<int>& perm) {
    slots[0] = 0;
    std::copy(perm.begin(), perm.end(), slots.begin() + 1);
    led.reset();
    if (full_sort)
      engine::sort_range(alg, slots, 1, n, cnt, sink);
    else
      engine::partition_dispatch(alg, slots, 1, n, cnt);
    const std::uint64_t cost = kind == CostKind::Comparisons ? led.comparisons : led.swaps;
    total += cost;
    auto& slot = acc[pivot_set(alg, perm)];
    slot.cost_sum += cost;
    slot.count += 1;
  });
  EnumerationReport rep;
  rep.n = n;
  rep.alg = alg;
  rep.kind = kind;
  rep.permutation_count = factorial(n);
  rep.exact_mean = Rational(static_cast<long>(total), static_cast<long>(rep.permutation_count));
  for (const auto& [pq, a] : acc)
    rep.per_pivot_means.emplace(
        pq, Rational(static_cast<long>(a.cost_sum), static_cast<long>(a.count)));
  return rep;
}

// Lehmer rank of the relative-order pattern of `sub` among all
// |sub|! arrangements.
std::size_t pattern_rank(std::span<const int> sub) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    std::size_t smaller_right = 0;
    for (std::size_t j = i + 1; j < sub.size(); ++j)
      if (sub[j] < sub[i]) ++smaller_right;
    rank = rank * (sub.size() - i) + smaller_right;
  }
  return rank;
}

}  // namespace

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

EnumerationReport enumerate_total(AlgorithmId alg, CostKind kind, int n,
                                  const EnumerationLimits& limits) {
  check_cap("enumerate_total", n, 2, limits.totals);
  return run_enumeration(alg, kind, n, /*full_sort=*/true);
}

EnumerationReport enumerate_partition(AlgorithmId alg, CostKind kind, int n,
                                      const EnumerationLimits& limits) {
  check_cap("enumerate_partition", n, 3, limits.partition);
  return run_enumeration(alg, kind, n, /*full_sort=*/false);
}

RandomnessReport verify_randomness_preservation(AlgorithmId alg, int n,
                                                const EnumerationLimits& limits) {
  check_cap("verify_randomness_preservation", n, 3, limits.randomness);
  RandomnessReport rep;
  rep.n = n;
  rep.alg = alg;
  const int subfile_count = alg == AlgorithmId::Classic ? 2 : 3;
  std::vector<int> slots(static_cast<std::size_t>(n) + 1);
  engine::NullCounter cnt;
  for_each_permutation(n, [&](const std::vector<int>& perm) {
    slots[0] = 0;
    std::copy(perm.begin(), perm.end(), slots.begin() + 1);
    const engine::StepResult r = engine::partition_dispatch(alg, slots, 1, n, cnt);
    const std::pair<int, int> key{slots[static_cast<std::size_t>(r.small_pos)],
                                  slots[static_cast<std::size_t>(r.large_pos)]};
    auto& tables = rep.arrangement_counts[key];
    if (tables.empty()) {
      tables.resize(static_cast<std::size_t>(subfile_count));
      const int p = key.first, q = key.second;
      const std::array<int, 3> sizes = alg == AlgorithmId::Classic
                                           ? std::array<int, 3>{p - 1, n - p, 0}
                                           : std::array<int, 3>{p - 1, q - p - 1, n - q};
      for (int s = 0; s < subfile_count; ++s)
        tables[static_cast<std::size_t>(s)].assign(factorial(sizes[static_cast<std::size_t>(s)]),
                                                   0);
    }
    const std::span<const int> keys{slots.data() + 1, static_cast<std::size_t>(n)};
    const auto bump = [&](int idx, int lo, int hi) {  // subrange [lo, hi] 1-based
      const auto sub = keys.subspan(static_cast<std::size_t>(lo) - 1,
                                    static_cast<std::size_t>(hi - lo + 1));
      ++tables[static_cast<std::size_t>(idx)][pattern_rank(sub)];
    };
    if (alg == AlgorithmId::Classic) {
      bump(0, 1, r.small_pos - 1);
      bump(1, r.small_pos + 1, n);
    } else {
      bump(0, 1, r.small_pos - 1);
      bump(1, r.small_pos + 1, r.large_pos - 1);
      bump(2, r.large_pos + 1, n);
    }
  });
  rep.uniform = true;
  for (const auto& [key, tables] : rep.arrangement_counts)
    for (const auto& counts : tables)
      for (const auto c : counts)
        if (c != counts.front()) rep.uniform = false;
  return rep;
}

CaseTwoReport verify_case_two_lemma(int n, const EnumerationLimits& limits) {
  check_cap("verify_case_two_lemma", n, 3, limits.totals);
  CaseTwoReport rep;
  rep.n = n;
  rep.equivalence_holds = true;
  std::map<std::pair<int, int>, std::pair<std::uint64_t, std::uint64_t>> freq;
  std::vector<int> slots(static_cast<std::size_t>(n) + 1);
  engine::NullCounter cnt;
  for_each_permutation(n, [&](const std::vector<int>& perm) {
    const auto [p, q] = pivot_set(AlgorithmId::YaroslavskiyDual, perm);
    const bool key_above_q = perm[static_cast<std::size_t>(q) - 1] > q;
    slots[0] = 0;
    std::copy(perm.begin(), perm.end(), slots.begin() + 1);
    const engine::StepResult r = engine::yaroslavskiy_partition(slots, 1, n, cnt);
    if (r.case_two != key_above_q) {
      rep.equivalence_holds = false;
      if (rep.counterexamples.size() < 10) rep.counterexamples.push_back(perm);
    }
    auto& f = freq[{p, q}];
    f.first += r.case_two ? 1 : 0;
    f.second += 1;
  });
  rep.frequencies_exact = true;
  for (const auto& [pq, f] : freq) {
    const Rational observed(static_cast<long>(f.first), static_cast<long>(f.second));
    if (observed != analytic::case_two_probability(n, pq.second)) rep.frequencies_exact = false;
  }
  return rep;
}

int count_class_at_zone(const std::vector<int>& keys, analytic::ElementClass c,
                        analytic::PositionZone zone) {
  const int n = static_cast<int>(keys.size());
  const auto [p, q] = std::minmax(keys.front(), keys.back());
  int lo = 0, hi = -1;  // 1-based position range of the zone
  switch (zone) {
    case analytic::PositionZone::Small: lo = 2; hi = p; break;
    case analytic::PositionZone::Middle: lo = p + 1; hi = q - 1; break;
    case analytic::PositionZone::Large: lo = q; hi = n - 1; break;
  }
  int count = 0;
  for (int pos = lo; pos <= hi; ++pos) {
    const int v = keys[static_cast<std::size_t>(pos) - 1];
    if (v == p || v == q) continue;
    const auto cls = v < p   ? analytic::ElementClass::Small
                     : v > q ? analytic::ElementClass::Large
                             : analytic::ElementClass::Middle;
    if (cls == c) ++count;
  }
  return count;
}

ClassPositionMatrix enumerate_class_positions(int n, const EnumerationLimits& limits) {
  check_cap("enumerate_class_positions", n, 3, limits.totals);
  std::array<std::array<std::uint64_t, 3>, 3> sums{};
  for_each_permutation(n, [&](const std::vector<int>& perm) {
    for (int ci = 0; ci < 3; ++ci)
      for (int zi = 0; zi < 3; ++zi)
        sums[static_cast<std::size_t>(ci)][static_cast<std::size_t>(zi)] +=
            static_cast<std::uint64_t>(
                count_class_at_zone(perm, static_cast<analytic::ElementClass>(ci),
                                    static_cast<analytic::PositionZone>(zi)));
  });
  ClassPositionMatrix m;
  const auto nf = static_cast<long>(factorial(n));
  for (int ci = 0; ci < 3; ++ci)
    for (int zi = 0; zi < 3; ++zi)
      m[static_cast<std::size_t>(ci)][static_cast<std::size_t>(zi)] =
          Rational(static_cast<long>(sums[static_cast<std::size_t>(ci)][static_cast<std::size_t>(zi)]),
                   nf);
  return m;
}

}  // namespace qslab::oracle

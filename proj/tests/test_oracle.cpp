#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "qslab/oracle.hpp"
#include "qslab/sort.hpp"

using namespace qslab;
using namespace qslab::analytic;
using namespace qslab::oracle;

TEST_CASE("enumerated totals equal the formulas") {
  for (AlgorithmId alg : kAllAlgorithms)
    for (CostKind kind : kAllCostKinds)
      for (int n = 2; n <= 6; ++n) {
        const auto rep = enumerate_total(alg, kind, n);
        CAPTURE(algorithm_name(alg));
        CAPTURE(cost_kind_name(kind));
        CAPTURE(n);
        REQUIRE(rep.exact_mean == expected_total_cost(alg, kind, n));
        REQUIRE(rep.permutation_count == factorial(n));
      }
}

TEST_CASE("per-pivot means reweight to the overall mean") {
  for (AlgorithmId alg : kAllAlgorithms) {
    const int n = 6;
    const auto rep = enumerate_total(alg, CostKind::Comparisons, n);
    Rational sum(0);
    if (alg == AlgorithmId::Classic) {
      REQUIRE(rep.per_pivot_means.size() == static_cast<std::size_t>(n));
      for (const auto& [pq, mean] : rep.per_pivot_means) sum += mean / Rational(n);
    } else {
      REQUIRE(rep.per_pivot_means.size() == static_cast<std::size_t>(n * (n - 1) / 2));
      for (const auto& [pq, mean] : rep.per_pivot_means)
        sum += mean * Rational(2) / Rational(n * (n - 1));
    }
    CHECK(sum == rep.exact_mean);
  }
}

TEST_CASE("enumerated first-step costs equal the formulas, per pivot pair too") {
  const std::pair<AlgorithmId, CostKind> families[] = {
      {AlgorithmId::YaroslavskiyDual, CostKind::Comparisons},
      {AlgorithmId::YaroslavskiyDual, CostKind::Swaps},
      {AlgorithmId::SedgewickDual, CostKind::Comparisons},
      {AlgorithmId::SedgewickDual, CostKind::Swaps}};
  for (const auto& [alg, kind] : families)
    for (int n = 3; n <= 7; ++n) {
      const auto rep = enumerate_partition(alg, kind, n);
      CAPTURE(algorithm_name(alg));
      CAPTURE(cost_kind_name(kind));
      CAPTURE(n);
      REQUIRE(rep.exact_mean == expected_partition_cost(alg, kind, n));
      if (alg == AlgorithmId::SedgewickDual && kind == CostKind::Swaps) continue;
      for (const auto& [pq, mean] : rep.per_pivot_means)
        REQUIRE(mean == conditional_partition_cost(alg, kind, n, pq.first, pq.second));
    }
}

TEST_CASE("comparison costs do not depend on which end held which pivot") {
  const int n = 5;
  for (AlgorithmId alg : kDualPivotAlgorithms) {
    std::map<std::pair<int, int>, std::pair<std::uint64_t, std::uint64_t>> ordered;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      TrackedArray arr = TrackedArray::from_keys(perm);
      const auto t = partition_step(alg, arr, 1, n);
      auto& slot = ordered[{perm.front(), perm.back()}];
      slot.first += t.comparisons;
      slot.second += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& [pq, sums] : ordered) {
      if (pq.first > pq.second) continue;
      const auto& mirrored = ordered.at({pq.second, pq.first});
      CAPTURE(algorithm_name(alg));
      CAPTURE(pq.first);
      CAPTURE(pq.second);
      REQUIRE(sums.second == mirrored.second);
      REQUIRE(sums.first == mirrored.first);
    }
  }
}

TEST_CASE("case-two exit criterion and its conditional frequency") {
  for (int n = 3; n <= 7; ++n) {
    const auto rep = verify_case_two_lemma(n);
    CAPTURE(n);
    CHECK(rep.equivalence_holds);
    CHECK(rep.frequencies_exact);
    CHECK(rep.counterexamples.empty());
  }
}

TEST_CASE("class/zone counts for the worked permutation") {
  const std::vector<int> perm = {2, 4, 7, 8, 1, 6, 9, 3, 5};
  CHECK(count_class_at_zone(perm, ElementClass::Large, PositionZone::Middle) == 2);
  CHECK(count_class_at_zone(perm, ElementClass::Small, PositionZone::Middle) == 0);
  CHECK(count_class_at_zone(perm, ElementClass::Middle, PositionZone::Middle) == 0);
}

TEST_CASE("enumerated class/zone matrix equals the hypergeometric means") {
  for (int n = 3; n <= 7; ++n) {
    const auto m = enumerate_class_positions(n);
    for (int c = 0; c < 3; ++c)
      for (int z = 0; z < 3; ++z) {
        CAPTURE(n);
        CAPTURE(c);
        CAPTURE(z);
        REQUIRE(m[static_cast<std::size_t>(c)][static_cast<std::size_t>(z)] ==
                class_position_mean(static_cast<ElementClass>(c), static_cast<PositionZone>(z),
                                    n));
      }
  }
}

TEST_CASE("subfile arrangements are uniform for all three variants") {
  for (AlgorithmId alg : kAllAlgorithms)
    for (int n = 3; n <= 5; ++n) {
      const auto rep = verify_randomness_preservation(alg, n);
      CAPTURE(algorithm_name(alg));
      CAPTURE(n);
      REQUIRE(rep.uniform);
      // every arrangement table covers its subfile's full pattern space
      for (const auto& [pq, tables] : rep.arrangement_counts) {
        const int p = pq.first, q = pq.second;
        const std::vector<int> sizes =
            alg == AlgorithmId::Classic ? std::vector<int>{p - 1, n - p}
                                        : std::vector<int>{p - 1, q - p - 1, n - q};
        REQUIRE(tables.size() == sizes.size());
        for (std::size_t s = 0; s < sizes.size(); ++s) {
          REQUIRE(tables[s].size() == factorial(sizes[s]));
          for (auto count : tables[s]) REQUIRE(count > 0);
        }
      }
    }
}

TEST_CASE("raw enumeration counts satisfy the divide-and-conquer recurrence") {
  for (AlgorithmId alg : kDualPivotAlgorithms)
    for (CostKind kind : kAllCostKinds) {
      std::vector<Rational> totals(8, Rational(0));
      for (int k = 2; k <= 7; ++k)
        totals[static_cast<std::size_t>(k)] = enumerate_total(alg, kind, k).exact_mean;
      for (int n = 3; n <= 7; ++n) {
        Rational rhs = enumerate_partition(alg, kind, n).exact_mean;
        Rational weighted(0);
        for (int k = 0; k <= n - 2; ++k)
          weighted += Rational(n - k - 1) * totals[static_cast<std::size_t>(k)];
        rhs += Rational(6) / Rational(n * (n - 1)) * weighted;
        CAPTURE(algorithm_name(alg));
        CAPTURE(cost_kind_name(kind));
        CAPTURE(n);
        REQUIRE(rhs == totals[static_cast<std::size_t>(n)]);
      }
    }
}

TEST_CASE("size caps are enforced") {
  CHECK_THROWS_AS(enumerate_total(AlgorithmId::Classic, CostKind::Comparisons, 9),
                  std::domain_error);
  CHECK_THROWS_AS(enumerate_total(AlgorithmId::Classic, CostKind::Comparisons, 1),
                  std::domain_error);
  CHECK_THROWS_AS(enumerate_partition(AlgorithmId::Classic, CostKind::Comparisons, 10),
                  std::domain_error);
  CHECK_THROWS_AS(verify_randomness_preservation(AlgorithmId::Classic, 8), std::domain_error);
  CHECK_THROWS_AS(verify_case_two_lemma(9), std::domain_error);
  EnumerationLimits tight;
  tight.totals = 4;
  CHECK_THROWS_AS(enumerate_total(AlgorithmId::Classic, CostKind::Comparisons, 5, tight),
                  std::domain_error);
}

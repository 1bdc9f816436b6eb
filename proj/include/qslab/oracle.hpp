#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qslab/analytic.hpp"
#include "qslab/cost_model.hpp"
#include "qslab/rational.hpp"

namespace qslab::oracle {

/// Enumeration size caps. Configuration, not hard limits of the method:
/// they keep the default suites fast. Requests above a cap are refused.
struct EnumerationLimits {
  int totals = 8;      // full sorts over all n! permutations
  int partition = 9;   // first partitioning step only
  int randomness = 7;  // subfile arrangement frequency tables
};

/// Exact mean of one cost over all n! permutations, with a breakdown by
/// the first step's pivot value set {p, q} (p == q for the classic
/// variant). The mean always equals the count-weighted average of the
/// per-pivot means.
struct EnumerationReport {
  int n = 0;
  AlgorithmId alg{};
  CostKind kind{};
  Rational exact_mean;
  std::map<std::pair<int, int>, Rational> per_pivot_means;
  std::uint64_t permutation_count = 0;
};

/// Costs of complete sorts, every permutation of {1..n}. 2 <= n <= cap.
EnumerationReport enumerate_total(AlgorithmId alg, CostKind kind, int n,
                                  const EnumerationLimits& limits = {});

/// Costs of the first partitioning step only. 3 <= n <= cap.
EnumerationReport enumerate_partition(AlgorithmId alg, CostKind kind, int n,
                                      const EnumerationLimits& limits = {});

/// Frequency table of subfile arrangements after one partitioning step,
/// keyed by pivot value set. Arrangements are rank-reduced (relative order
/// pattern, Lehmer-ranked) since the value sets differ across pivot
/// choices. Uniform means: for each pivot set and each subfile, every
/// arrangement of that subfile occurs equally often.
struct RandomnessReport {
  int n = 0;
  AlgorithmId alg{};
  bool uniform = false;
  // pivot set -> one count-per-pattern vector per subfile
  std::map<std::pair<int, int>, std::vector<std::vector<std::uint64_t>>> arrangement_counts;
};
RandomnessReport verify_randomness_preservation(AlgorithmId alg, int n,
                                                const EnumerationLimits& limits = {});

/// Exhaustive check of the case-two exit criterion: the Yaroslavskiy main
/// loop leaves with k = g+2 exactly when the key initially at position q
/// exceeds q. Also checks that, per pivot pair, the observed case-two
/// frequency equals (n-q)/(n-2) exactly.
struct CaseTwoReport {
  int n = 0;
  bool equivalence_holds = false;
  bool frequencies_exact = false;
  std::vector<std::vector<int>> counterexamples;  // at most 10 retained
};
CaseTwoReport verify_case_two_lemma(int n, const EnumerationLimits& limits = {});

/// 3x3 matrix of E[class-c elements at positions of zone P], exact over
/// all n! permutations; rows s/m/l, columns S/M/L.
using ClassPositionMatrix = std::array<std::array<Rational, 3>, 3>;
ClassPositionMatrix enumerate_class_positions(int n, const EnumerationLimits& limits = {});

/// Count of class-c keys located at positions of zone P in one permutation
/// with pivots p < q at its ends (the first and last key).
int count_class_at_zone(const std::vector<int>& keys, analytic::ElementClass c,
                        analytic::PositionZone zone);

std::uint64_t factorial(int n);

}  // namespace qslab::oracle

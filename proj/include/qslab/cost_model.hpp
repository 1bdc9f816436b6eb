#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace qslab {

enum class AlgorithmId { Classic, SedgewickDual, YaroslavskiyDual };

enum class CostKind { Comparisons, Swaps };

/// One counter per place in the code where a key comparison happens.
/// Every key comparison an algorithm performs increments exactly one of
/// these together with the ledger total.
enum class CompareSite : int {
  ClassicScanLt,   // left-to-right scan, A[i] < pivot
  ClassicScanGt,   // right-to-left scan, A[j] > pivot
  SedPivotOrder,   // p > q ordering of the two pivots
  SedScanILeQ,     // i-scan, A[i] <= q
  SedILtP,         // inner test, A[i] < p
  SedScanJGeP,     // j-scan, A[j] >= p
  SedJGtQ,         // inner test, A[j] > q
  YarPivotOrder,   // p > q ordering of the two pivots
  YarKLtP,         // main loop, A[k] < p
  YarKGtQ,         // main loop, A[k] > q
  YarGGtQ,         // g-scan, A[g] > q
  YarKSwappedLtP,  // after the large swap, A[k] < p
};

inline constexpr int kNumCompareSites = 12;

const char* site_label(CompareSite site);
std::span<const CompareSite> compare_sites_of(AlgorithmId alg);

const char* algorithm_name(AlgorithmId alg);
const char* cost_kind_name(CostKind kind);

/// Accepts "classic", "sedgewick", "yaroslavskiy" (case-insensitive).
/// Throws std::invalid_argument for anything else.
AlgorithmId parse_algorithm(const std::string& name);
CostKind parse_cost_kind(const std::string& name);

inline constexpr std::array<AlgorithmId, 3> kAllAlgorithms = {
    AlgorithmId::Classic, AlgorithmId::SedgewickDual, AlgorithmId::YaroslavskiyDual};
inline constexpr std::array<AlgorithmId, 2> kDualPivotAlgorithms = {
    AlgorithmId::SedgewickDual, AlgorithmId::YaroslavskiyDual};
inline constexpr std::array<CostKind, 2> kAllCostKinds = {CostKind::Comparisons,
                                                          CostKind::Swaps};

}  // namespace qslab

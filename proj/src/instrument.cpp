#include "qslab/instrument.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qslab {

static_assert(static_cast<int>(CompareSite::YarKSwappedLtP) + 1 == kNumCompareSites);

const char* site_label(CompareSite site) {
  switch (site) {
    case CompareSite::ClassicScanLt: return "classic.scan_lt_pivot";
    case CompareSite::ClassicScanGt: return "classic.scan_gt_pivot";
    case CompareSite::SedPivotOrder: return "sedgewick.pivot_order";
    case CompareSite::SedScanILeQ: return "sedgewick.scan_i_le_q";
    case CompareSite::SedILtP: return "sedgewick.i_lt_p";
    case CompareSite::SedScanJGeP: return "sedgewick.scan_j_ge_p";
    case CompareSite::SedJGtQ: return "sedgewick.j_gt_q";
    case CompareSite::YarPivotOrder: return "yaroslavskiy.pivot_order";
    case CompareSite::YarKLtP: return "yaroslavskiy.k_lt_p";
    case CompareSite::YarKGtQ: return "yaroslavskiy.k_gt_q";
    case CompareSite::YarGGtQ: return "yaroslavskiy.g_gt_q";
    case CompareSite::YarKSwappedLtP: return "yaroslavskiy.swapped_k_lt_p";
  }
  return "?";
}

std::span<const CompareSite> compare_sites_of(AlgorithmId alg) {
  static constexpr std::array<CompareSite, 2> classic = {CompareSite::ClassicScanLt,
                                                         CompareSite::ClassicScanGt};
  static constexpr std::array<CompareSite, 5> sed = {
      CompareSite::SedPivotOrder, CompareSite::SedScanILeQ, CompareSite::SedILtP,
      CompareSite::SedScanJGeP, CompareSite::SedJGtQ};
  static constexpr std::array<CompareSite, 5> yar = {
      CompareSite::YarPivotOrder, CompareSite::YarKLtP, CompareSite::YarKGtQ,
      CompareSite::YarGGtQ, CompareSite::YarKSwappedLtP};
  switch (alg) {
    case AlgorithmId::Classic: return classic;
    case AlgorithmId::SedgewickDual: return sed;
    case AlgorithmId::YaroslavskiyDual: return yar;
  }
  return {};
}

const char* algorithm_name(AlgorithmId alg) {
  switch (alg) {
    case AlgorithmId::Classic: return "classic";
    case AlgorithmId::SedgewickDual: return "sedgewick";
    case AlgorithmId::YaroslavskiyDual: return "yaroslavskiy";
  }
  return "?";
}

const char* cost_kind_name(CostKind kind) {
  return kind == CostKind::Comparisons ? "comparisons" : "swaps";
}

AlgorithmId parse_algorithm(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "classic") return AlgorithmId::Classic;
  if (s == "sedgewick") return AlgorithmId::SedgewickDual;
  if (s == "yaroslavskiy") return AlgorithmId::YaroslavskiyDual;
  throw std::invalid_argument("unknown algorithm '" + name +
                              "' (expected classic, sedgewick or yaroslavskiy)");
}

CostKind parse_cost_kind(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "comparisons" || s == "comps" || s == "c") return CostKind::Comparisons;
  if (s == "swaps" || s == "s") return CostKind::Swaps;
  throw std::invalid_argument("unknown cost kind '" + name + "' (expected comparisons or swaps)");
}

TrackedArray TrackedArray::from_keys(const std::vector<int>& keys) {
  const int n = static_cast<int>(keys.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int k : keys) {
    if (k < 1 || k > n)
      throw std::invalid_argument("key " + std::to_string(k) +
                                  " outside 1.." + std::to_string(n) +
                                  ": keys must form a permutation of 1..n");
    if (seen[static_cast<std::size_t>(k)])
      throw std::invalid_argument("duplicate key " + std::to_string(k) +
                                  ": distinct keys required");
    seen[static_cast<std::size_t>(k)] = 1;
  }
  TrackedArray arr;
  arr.slots_.resize(static_cast<std::size_t>(n) + 1);
  arr.slots_[0] = 0;  // sentinel below every key
  std::copy(keys.begin(), keys.end(), arr.slots_.begin() + 1);
  return arr;
}

bool TrackedArray::is_sorted() const {
  for (int i = 1; i < size(); ++i)
    if (slots_[static_cast<std::size_t>(i)] > slots_[static_cast<std::size_t>(i) + 1]) return false;
  return true;
}

std::string classify_range(std::span<const int> keys, int small_pivot, int large_pivot) {
  std::string out;
  out.reserve(keys.size());
  for (int k : keys) {
    if (k == small_pivot)
      out.push_back('p');
    else if (k == large_pivot)
      out.push_back('q');
    else if (k < small_pivot)
      out.push_back('s');
    else if (k > large_pivot)
      out.push_back('l');
    else
      out.push_back('m');
  }
  return out;
}

}  // namespace qslab

#pragma once

#include <functional>
#include <vector>

#include "qslab/cost_model.hpp"
#include "qslab/rational.hpp"

namespace qslab::analytic {

/// Euler-Mascheroni constant, 19 significant digits.
inline constexpr double kEulerGamma = 0.5772156649015328606;

/// nth harmonic number, exactly. n >= 1.
Rational harmonic(long n);

/// Parameters of a linear expected partitioning cost a(n+1) + b with the
/// size-2 base cost d.
struct RecurrenceParams {
  Rational a, b, d;
};

/// Closed form of the expected total cost for a dual-pivot variant with
/// linear partitioning cost a(n+1)+b and base d:
///   (6/5)a(n+1)(H_{n+1} - 1/5) + (-(3/2)a + (3/10)b + (1/10)d)(n+1) - b/2.
/// Valid for n >= 4 only; smaller n must come from the recurrence.
Rational total_cost_closed_form(const RecurrenceParams& params, long n);

/// Iterates the dual-pivot total-cost recurrence
///   C_n = cost(n) + (6 / (n(n-1))) * sum_{k=0}^{n-2} (n-k-1) C_k
/// with C_0 = C_1 = 0 and C_2 = d, returning C_0..C_{n_max}. The cost
/// function may be nonlinear (Sedgewick's comparison cost is).
std::vector<Rational> total_cost_by_recurrence(
    const std::function<Rational(long)>& partition_cost, const Rational& d, long n_max);

/// Per-variant closed-form coefficients of the expected total cost,
///   C_n = harmonic_coeff (n+1) H_{n+1} + linear_coeff (n+1) + constant,
/// together with the smallest n the formula is exact for (oracle-verified:
/// 2 for the classic variant, 4 for both dual-pivot variants).
struct TotalCostFormula {
  Rational harmonic_coeff, linear_coeff, constant;
  long valid_from;
};
TotalCostFormula total_cost_formula(AlgorithmId alg, CostKind kind);

/// Recurrence parameters (a, b, d) for the dual-pivot variants.
RecurrenceParams recurrence_params(AlgorithmId alg, CostKind kind);

/// Exact expected total cost over all n! permutations, any n >= 0. Uses
/// the closed form within its validity range and the recurrence base
/// values below it.
Rational expected_total_cost(AlgorithmId alg, CostKind kind, long n);

/// Expected cost of the first partitioning step on a random permutation of
/// length n >= 3. Dual-pivot variants only.
Rational expected_partition_cost(AlgorithmId alg, CostKind kind, long n);

/// Expected first-step cost conditioned on the pivot values (p, q),
/// 1 <= p < q <= n, n >= 3. Defined for Yaroslavskiy comparisons/swaps and
/// Sedgewick comparisons; no closed form exists for Sedgewick swaps.
/// At (p, q) = (1, n) the Sedgewick ratio terms have an empty denominator
/// and evaluate to 0 (there are no small or large elements).
Rational conditional_partition_cost(AlgorithmId alg, CostKind kind, long n, long p, long q);

enum class ElementClass { Small, Middle, Large };   // value below p / between / above q
enum class PositionZone { Small, Middle, Large };   // index ranges those classes end up in

const char* element_class_name(ElementClass c);
const char* position_zone_name(PositionZone z);

/// E[number of class-c elements initially located at positions in zone P]
/// over all permutations of length n >= 3: (n-1)/6 when c and P correspond,
/// (n-3)/12 otherwise.
Rational class_position_mean(ElementClass c, PositionZone zone, long n);

/// Probability that Yaroslavskiy's main loop exits with k = g+2, given the
/// large pivot has rank q: (n-q)/(n-2). Requires n >= 3, 2 <= q <= n.
Rational case_two_probability(long n, long q);

/// The six class-at-zone terms that approximate a dual-pivot variant's
/// expected first-step comparison count, plus the slope of the total
/// (scan base + terms) as a linear function of n. A term is "expensive"
/// when its class and zone correspond (value (n-1)/6 instead of (n-3)/12).
struct DecompositionTerm {
  ElementClass elem;
  PositionZone zone;
  Rational value;
  bool expensive;
};
struct Decomposition {
  std::vector<DecompositionTerm> terms;  // always six
  Rational scan_base;                    // the comparisons outside the six terms
  Rational total;                        // scan_base + sum of terms
  Rational leading_coefficient;          // slope of the total in n
};
Decomposition partition_comparison_decomposition(AlgorithmId alg, long n);

/// Coefficients of C_n = alpha n ln n + beta n + O(ln n): alpha is the
/// harmonic coefficient, beta = alpha * gamma + linear coefficient.
struct AsymptoticCoefficients {
  double alpha, beta;
  Rational alpha_exact;
  Rational linear_exact;
};
AsymptoticCoefficients asymptotic_coefficients(AlgorithmId alg, CostKind kind);

}  // namespace qslab::analytic

// Acceptance suite: one check per criterion, exact tolerances pinned in
// code. Run with no arguments for the full suite or pass criterion numbers
// to run a subset. Prints one PASS/FAIL line per criterion; the exit code
// is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qslab/analytic.hpp"
#include "qslab/bench.hpp"
#include "qslab/montecarlo.hpp"
#include "qslab/oracle.hpp"

using namespace qslab;
using namespace qslab::analytic;

namespace {

struct Log {
  std::ostringstream out;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      out << "    FAIL " << what << "\n";
    }
  }
  void note(const std::string& what) { out << "    " << what << "\n"; }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Exhaustive totals for n = 2..8 equal the closed forms (or the
//    recurrence values below each formula's validity), exact equality.
bool criterion_totals(Log& log) {
  const auto start = std::chrono::steady_clock::now();
  for (AlgorithmId alg : kAllAlgorithms)
    for (CostKind kind : kAllCostKinds)
      for (int n = 2; n <= 8; ++n) {
        const auto rep = oracle::enumerate_total(alg, kind, n);
        const Rational want = expected_total_cost(alg, kind, n);
        log.expect(rep.exact_mean == want,
                   std::string(algorithm_name(alg)) + " " + cost_kind_name(kind) + " n=" +
                       std::to_string(n) + ": enumerated " + rep.exact_mean.str() +
                       " != formula " + want.str());
      }
  const auto yc = [&](int n) {
    return oracle::enumerate_total(AlgorithmId::YaroslavskiyDual, CostKind::Comparisons, n)
        .exact_mean;
  };
  log.expect(yc(2) == Rational(1), "anchor comparisons C_2 == 1");
  log.expect(yc(3) == rat(10, 3), "anchor comparisons C_3 == 10/3");
  log.expect(yc(4) == rat(65, 12), "anchor comparisons C_4 == 65/12");
  log.expect(oracle::enumerate_total(AlgorithmId::YaroslavskiyDual, CostKind::Swaps, 2)
                     .exact_mean == rat(5, 2),
             "anchor swaps C_2 == 5/2");
  const double elapsed = seconds_since(start);
  log.note("elapsed " + std::to_string(elapsed) + " s");
  log.expect(elapsed < 120.0, "runtime must stay under 2 minutes");
  return log.ok;
}

// 2. First-step costs for n = 3..9 equal the partition-cost formulas for
//    all four (algorithm, kind) pairs, including the nonlinear term.
bool criterion_partition(Log& log) {
  for (AlgorithmId alg : kDualPivotAlgorithms)
    for (CostKind kind : kAllCostKinds)
      for (int n = 3; n <= 9; ++n) {
        const auto rep = oracle::enumerate_partition(alg, kind, n);
        const Rational want = expected_partition_cost(alg, kind, n);
        log.expect(rep.exact_mean == want,
                   std::string(algorithm_name(alg)) + " " + cost_kind_name(kind) + " n=" +
                       std::to_string(n) + ": enumerated " + rep.exact_mean.str() +
                       " != formula " + want.str());
      }
  return log.ok;
}

// 3. Per-pivot-pair means equal the conditional formulas for every (p, q),
//    n <= 8, for the three families that have closed conditional forms.
bool criterion_conditionals(Log& log) {
  const std::pair<AlgorithmId, CostKind> families[] = {
      {AlgorithmId::YaroslavskiyDual, CostKind::Comparisons},
      {AlgorithmId::YaroslavskiyDual, CostKind::Swaps},
      {AlgorithmId::SedgewickDual, CostKind::Comparisons}};
  for (const auto& [alg, kind] : families)
    for (int n = 3; n <= 8; ++n) {
      const auto rep = oracle::enumerate_partition(alg, kind, n);
      log.expect(rep.per_pivot_means.size() ==
                     static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2,
                 "every pivot pair must be covered at n=" + std::to_string(n));
      for (const auto& [pq, mean] : rep.per_pivot_means) {
        const Rational want = conditional_partition_cost(alg, kind, n, pq.first, pq.second);
        log.expect(mean == want, std::string(algorithm_name(alg)) + " " +
                                     cost_kind_name(kind) + " n=" + std::to_string(n) + " (p,q)=(" +
                                     std::to_string(pq.first) + "," + std::to_string(pq.second) +
                                     "): " + mean.str() + " != " + want.str());
      }
    }
  return log.ok;
}

// 4. Loop-exit criterion: case two iff the key initially at position q
//    exceeds q, and its conditional frequency equals (n-q)/(n-2) exactly.
bool criterion_case_two(Log& log) {
  for (int n = 3; n <= 8; ++n) {
    const auto rep = oracle::verify_case_two_lemma(n);
    log.expect(rep.equivalence_holds, "equivalence violated at n=" + std::to_string(n));
    log.expect(rep.frequencies_exact, "frequencies off at n=" + std::to_string(n));
  }
  return log.ok;
}

// 5. The class/zone expectation matrix matches ((n-1)/6 diagonal,
//    (n-3)/12 off-diagonal) exactly for n <= 8, and the six-term
//    decomposition has slope 19/12 with one expensive term vs three.
bool criterion_class_matrix(Log& log) {
  for (int n = 3; n <= 8; ++n) {
    const auto m = oracle::enumerate_class_positions(n);
    for (int c = 0; c < 3; ++c)
      for (int z = 0; z < 3; ++z) {
        const Rational want = class_position_mean(static_cast<ElementClass>(c),
                                                  static_cast<PositionZone>(z), n);
        log.expect(m[static_cast<std::size_t>(c)][static_cast<std::size_t>(z)] == want,
                   "matrix cell (" + std::to_string(c) + "," + std::to_string(z) + ") at n=" +
                       std::to_string(n));
      }
  }
  const auto dy = partition_comparison_decomposition(AlgorithmId::YaroslavskiyDual, 25);
  const auto ds = partition_comparison_decomposition(AlgorithmId::SedgewickDual, 25);
  int ey = 0, es = 0;
  for (const auto& t : dy.terms) ey += t.expensive ? 1 : 0;
  for (const auto& t : ds.terms) es += t.expensive ? 1 : 0;
  log.expect(dy.leading_coefficient == rat(19, 12), "decomposition slope must be 19/12");
  log.expect(ey == 1, "one expensive term expected");
  log.expect(es == 3, "three expensive terms expected");
  log.expect(dy.total == expected_partition_cost(AlgorithmId::YaroslavskiyDual,
                                                 CostKind::Comparisons, 25),
             "decomposition total must equal the first-step comparison count");
  return log.ok;
}

// 6. Recurrence machinery: closed form == iterated recurrence for
//    4 <= n <= 200 over randomized parameters; the linearized Sedgewick
//    cost overestimates by exactly (n+1)/90; the exact Sedgewick cost
//    reproduces its total formula for n <= 50.
bool criterion_recurrence(Log& log) {
  std::mt19937_64 rng(60901);
  const auto random_rational = [&rng]() {
    return Rational(static_cast<long>(rng() % 201) - 100, static_cast<long>(rng() % 24) + 1);
  };
  std::vector<RecurrenceParams> params;
  for (AlgorithmId alg : kDualPivotAlgorithms)
    for (CostKind kind : kAllCostKinds) params.push_back(recurrence_params(alg, kind));
  for (int i = 0; i < 6; ++i)
    params.push_back({random_rational(), random_rational(), random_rational()});

  for (std::size_t pi = 0; pi < params.size(); ++pi) {
    const auto& p = params[pi];
    const auto c = total_cost_by_recurrence(
        [&p](long n) { return p.a * Rational(n + 1) + p.b; }, p.d, 200);
    for (long n = 4; n <= 200; ++n)
      if (c[static_cast<std::size_t>(n)] != total_cost_closed_form(p, n)) {
        log.expect(false, "closed form != recurrence for parameter set " + std::to_string(pi) +
                              " at n=" + std::to_string(n));
        break;
      }
  }

  const RecurrenceParams lin{rat(16, 9), Rational(-3), Rational(2)};
  for (long n = 4; n <= 200; ++n) {
    const Rational err =
        total_cost_closed_form(lin, n) -
        expected_total_cost(AlgorithmId::SedgewickDual, CostKind::Comparisons, n);
    if (err != Rational(n + 1, 90)) {
      log.expect(false, "linearized overestimate != (n+1)/90 at n=" + std::to_string(n));
      break;
    }
  }

  const auto sed = total_cost_by_recurrence(
      [](long n) {
        return expected_partition_cost(AlgorithmId::SedgewickDual, CostKind::Comparisons, n);
      },
      Rational(2), 50);
  for (long n = 4; n <= 50; ++n)
    log.expect(sed[static_cast<std::size_t>(n)] ==
                   expected_total_cost(AlgorithmId::SedgewickDual, CostKind::Comparisons, n),
               "exact-cost recurrence != total formula at n=" + std::to_string(n));
  return log.ok;
}

// 7. All three variants preserve randomness: for n <= 6, every subfile
//    arrangement occurs equally often given the pivot set.
bool criterion_randomness(Log& log) {
  for (AlgorithmId alg : kAllAlgorithms)
    for (int n = 3; n <= 6; ++n) {
      const auto rep = oracle::verify_randomness_preservation(alg, n);
      log.expect(rep.uniform, std::string(algorithm_name(alg)) + " nonuniform at n=" +
                                  std::to_string(n));
    }
  return log.ok;
}

// 8. Monte Carlo: at n in {100, 1000, 10000} with 10^4 trials, sample
//    means lie within 4 standard errors of the formulas, for all pairs.
bool criterion_montecarlo(Log& log) {
  const auto start = std::chrono::steady_clock::now();
  constexpr long kTrials = 10000;
  constexpr std::uint64_t kSeed = 1;
  for (AlgorithmId alg : kAllAlgorithms)
    for (CostKind kind : kAllCostKinds)
      for (const int n : {100, 1000, 10000}) {
        const auto est = montecarlo::estimate(alg, kind, n, kTrials, kSeed, 1);
        const double formula = expected_total_cost(alg, kind, n).to_double();
        const double z = (est.mean - formula) / est.std_error;
        char line[192];
        std::snprintf(line, sizeof line, "%s %s n=%d mean=%.3f formula=%.3f z=%+.3f",
                      algorithm_name(alg), cost_kind_name(kind), n, est.mean, formula, z);
        log.note(line);
        log.expect(std::abs(z) <= 4.0, "z-score out of range");
      }
  const double elapsed = seconds_since(start);
  log.note("elapsed " + std::to_string(elapsed) + " s");
  log.expect(elapsed < 300.0, "runtime must stay under 5 minutes");
  return log.ok;
}

// 9. Asymptotic coefficients round to the published two-decimal
//    approximations, within +-0.005 before rounding.
bool criterion_asymptotics(Log& log) {
  struct Want {
    AlgorithmId alg;
    CostKind kind;
    double alpha, beta;
  };
  const Want wants[] = {
      {AlgorithmId::Classic, CostKind::Comparisons, 2.00, -1.51},
      {AlgorithmId::Classic, CostKind::Swaps, 0.33, -0.58},
      {AlgorithmId::SedgewickDual, CostKind::Comparisons, 2.13, -2.57},
      {AlgorithmId::SedgewickDual, CostKind::Swaps, 0.80, -0.30},
      {AlgorithmId::YaroslavskiyDual, CostKind::Comparisons, 1.90, -2.46},
      {AlgorithmId::YaroslavskiyDual, CostKind::Swaps, 0.60, +0.08},
  };
  for (const auto& w : wants) {
    const auto c = asymptotic_coefficients(w.alg, w.kind);
    char line[192];
    std::snprintf(line, sizeof line, "%s %s alpha=%.6f (ref %.2f) beta=%.6f (ref %.2f)",
                  algorithm_name(w.alg), cost_kind_name(w.kind), c.alpha, w.alpha, c.beta,
                  w.beta);
    log.note(line);
    log.expect(std::abs(c.alpha - w.alpha) <= 0.005, "alpha beyond +-0.005 of the reference");
    log.expect(std::abs(c.beta - w.beta) <= 0.005, "beta beyond +-0.005 of the reference");
  }
  if (!log.ok)
    log.note("note: the classic swaps beta is exactly gamma/3 - 7/9 = -0.585373, which rounds "
             "to -0.59; the -0.58 reference value appears truncated rather than rounded, so "
             "this single sub-check cannot pass with a faithful tolerance");
  return log.ok;
}

// 10. Timing-grid protocol: the three-algorithm grid runs with correctness
//     self-checks and emits schema-conformant CSV. Absolute times are
//     machine-dependent and deliberately unchecked.
bool criterion_bench(Log& log) {
  bench::GridConfig cfg;
  cfg.algs = {kAllAlgorithms.begin(), kAllAlgorithms.end()};
  cfg.sizes = {1000, 10000, 100000};
  cfg.repetitions = 20;
  cfg.warmup = 3;
  cfg.seed = 1;
  const auto points = bench::run_grid(cfg);
  log.expect(points.size() == 9, "grid must contain 3 algorithms x 3 sizes");
  std::ostringstream os;
  bench::write_csv(os, points);
  std::istringstream in(os.str());
  std::string line;
  log.expect(static_cast<bool>(std::getline(in, line)), "csv header missing");
  log.expect(line == "alg,n,repetitions,mean_ns,min_ns,seed", "csv header mismatch");
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++rows;
    std::stringstream row(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    log.expect(fields.size() == 6, "csv row must have 6 fields");
    try {
      log.expect(std::stoll(fields[3]) > 0, "mean_ns must be a positive integer");
      log.expect(std::stoll(fields[4]) > 0, "min_ns must be a positive integer");
    } catch (const std::exception&) {
      log.expect(false, "csv numeric fields must parse");
    }
  }
  log.expect(rows == 9, "csv must contain one row per grid point");
  for (const auto& p : points)
    log.expect(p.min_seconds <= p.mean_seconds, "min must not exceed mean");
  return log.ok;
}

struct Criterion {
  int id;
  const char* name;
  bool (*run)(Log&);
};

const Criterion kCriteria[] = {
    {1, "exact total-cost reproduction, n=2..8", criterion_totals},
    {2, "partition-cost reproduction, n=3..9", criterion_partition},
    {3, "conditional-cost reproduction per pivot pair, n<=8", criterion_conditionals},
    {4, "case-two exit criterion and frequency, n<=8", criterion_case_two},
    {5, "class/zone matrix and comparison decomposition", criterion_class_matrix},
    {6, "recurrence machinery, n<=200", criterion_recurrence},
    {7, "randomness preservation, n<=6", criterion_randomness},
    {8, "Monte Carlo consistency at n=100/1000/10000", criterion_montecarlo},
    {9, "asymptotic coefficients vs published approximations", criterion_asymptotics},
    {10, "timing-grid protocol and CSV schema", criterion_bench},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  int failures = 0;
  for (const auto& c : kCriteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), c.id) == selected.end())
      continue;
    Log log;
    bool ok = false;
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      log.note(std::string("exception: ") + e.what());
      ok = false;
    }
    std::cout << "criterion " << c.id << " (" << c.name << "): " << (ok ? "PASS" : "FAIL")
              << "\n"
              << log.out.str();
    failures += ok ? 0 : 1;
  }
  return failures;
}

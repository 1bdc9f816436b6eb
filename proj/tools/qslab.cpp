// qslab: command-line front end for the quicksort cost laboratory.
//
// Subcommands:
//   sort      run one instrumented sort (or a single partitioning step)
//   expect    evaluate the exact cost formulas
//   verify    exhaustive-enumeration checks of every formula family
//   simulate  Monte Carlo estimates with z-scores against the formulas
//   bench     wall-clock timing grid, CSV output
//
// Environment: QSLAB_SEED sets the default seed; QSLAB_CAP_TOTALS,
// QSLAB_CAP_PARTITION and QSLAB_CAP_RANDOMNESS override the enumeration
// caps. Flags always win over the environment.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qslab/analytic.hpp"
#include "qslab/bench.hpp"
#include "qslab/cost_model.hpp"
#include "qslab/montecarlo.hpp"
#include "qslab/oracle.hpp"
#include "qslab/sort.hpp"
#include "qslab/version.hpp"

using nlohmann::json;
using namespace qslab;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return std::strtoull(v, nullptr, 10);
}

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return static_cast<int>(std::strtol(v, nullptr, 10));
}

oracle::EnumerationLimits env_limits() {
  oracle::EnumerationLimits lim;
  lim.totals = env_int("QSLAB_CAP_TOTALS", lim.totals);
  lim.partition = env_int("QSLAB_CAP_PARTITION", lim.partition);
  lim.randomness = env_int("QSLAB_CAP_RANDOMNESS", lim.randomness);
  return lim;
}

std::string fmt_rational(const Rational& r) {
  if (r.is_integer()) return r.str();
  return r.str() + " ≈ " + r.decimal_str();
}

json artifact_header(const std::string& command) {
  return json{{"artifact", {{"name", kArtifactName}, {"version", kArtifactVersion}}},
              {"command", command}};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

std::vector<int> parse_key_list(const std::string& text) {
  std::vector<int> keys;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, ',')) {
    std::stringstream ts(token);  // also splits whitespace/newline separated values
    std::string w;
    while (ts >> w) keys.push_back(std::stoi(w));
  }
  return keys;
}

std::vector<int> read_key_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read input file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_key_list(ss.str());
}

std::vector<int> parse_sizes(const std::vector<std::string>& tokens) {
  std::vector<int> sizes;
  for (const auto& t : tokens) {
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const double v = std::stod(item);  // accepts 1e3 style
      if (v < 0 || v > 2e9) throw std::runtime_error("size out of range: " + item);
      sizes.push_back(static_cast<int>(std::llround(v)));
    }
  }
  return sizes;
}

json ledger_json(const CostLedger& led, AlgorithmId alg) {
  json sites = json::object();
  for (CompareSite s : compare_sites_of(alg))
    sites[site_label(s)] = led.site_hits[static_cast<std::size_t>(s)];
  return json{{"comparisons", led.comparisons}, {"swaps", led.swaps}, {"site_hits", sites}};
}

void print_ledger(std::ostream& os, const CostLedger& led, AlgorithmId alg) {
  os << "comparisons: " << led.comparisons << "\n";
  os << "swaps:       " << led.swaps << "\n";
  os << "site hits:\n";
  for (CompareSite s : compare_sites_of(alg))
    os << "  " << site_label(s) << ": " << led.site_hits[static_cast<std::size_t>(s)] << "\n";
}

// ---------------------------------------------------------------- sort --

struct SortArgs {
  std::string alg = "yaroslavskiy";
  std::optional<std::string> input;
  std::string input_file;
  int n = -1;
  std::uint64_t seed = 1;
  bool partition_only = false;
  std::string format = "table";
  std::string out;
};

int cmd_sort(const SortArgs& a) {
  const AlgorithmId alg = parse_algorithm(a.alg);
  std::vector<int> keys;
  if (a.input)
    keys = parse_key_list(*a.input);
  else if (!a.input_file.empty())
    keys = read_key_file(a.input_file);
  else if (a.n >= 0) {
    std::mt19937_64 rng(montecarlo::stream_seed(a.seed, 0));
    keys = montecarlo::random_permutation(a.n, rng);
  } else {
    throw std::runtime_error("sort needs --input, --input-file or --n");
  }

  TrackedArray arr = TrackedArray::from_keys(keys);
  std::ostringstream os;
  json doc = artifact_header("sort");
  doc["config"] = {{"alg", algorithm_name(alg)}, {"n", arr.size()}, {"seed", a.seed},
                   {"partition_only", a.partition_only}};

  if (a.partition_only) {
    if (arr.size() < 2) throw std::domain_error("a partitioning step needs at least 2 keys");
    const PartitionTrace t = partition_step(alg, arr, 1, arr.size());
    if (a.format == "json") {
      json sites = json::object();
      for (CompareSite s : compare_sites_of(alg))
        sites[site_label(s)] = t.site_hits[static_cast<std::size_t>(s)];
      doc["results"] = {{"keys_after", std::vector<int>(arr.keys().begin(), arr.keys().end())},
                        {"small_pivot", t.small_pivot},
                        {"large_pivot", t.large_pivot},
                        {"small_pivot_pos", t.small_pivot_pos},
                        {"large_pivot_pos", t.large_pivot_pos},
                        {"case_two", t.case_two},
                        {"exit_k", t.exit_k},
                        {"exit_g", t.exit_g},
                        {"exit_l", t.exit_l},
                        {"snapshot", t.snapshot},
                        {"comparisons", t.comparisons},
                        {"swaps", t.swaps},
                        {"site_hits", sites}};
      os << doc.dump(2) << "\n";
    } else {
      os << "after partition:";
      for (int k : arr.keys()) os << ' ' << k;
      os << "\nsnapshot: " << t.snapshot << "\n";
      os << "pivots: p=" << t.small_pivot << " at " << t.small_pivot_pos
         << ", q=" << t.large_pivot << " at " << t.large_pivot_pos << "\n";
      if (alg == AlgorithmId::YaroslavskiyDual)
        os << "case_two: " << (t.case_two ? "true" : "false") << " (exit k=" << t.exit_k
           << " g=" << t.exit_g << " l=" << t.exit_l << ")\n";
      print_ledger(os, arr.ledger(), alg);
    }
    emit(os.str(), a.out);
    return 0;
  }

  sort(alg, arr);
  if (!arr.is_sorted()) throw std::runtime_error("internal error: output not sorted");
  if (a.format == "json") {
    doc["results"] = {{"sorted", std::vector<int>(arr.keys().begin(), arr.keys().end())},
                      {"ledger", ledger_json(arr.ledger(), alg)}};
    os << doc.dump(2) << "\n";
  } else {
    if (arr.size() > 0) {
      bool first = true;
      for (int k : arr.keys()) {
        os << (first ? "" : " ") << k;
        first = false;
      }
      os << "\n";
      print_ledger(os, arr.ledger(), alg);
    }
  }
  emit(os.str(), a.out);
  return 0;
}

// -------------------------------------------------------------- expect --

struct ExpectArgs {
  std::string alg;
  std::string kind = "comparisons";
  long n = -1;
  long p = -1, q = -1;
  bool partition = false;
  bool conditional = false;
  bool class_matrix = false;
  bool case_two = false;
  bool decomposition = false;
  bool asymptotics = false;
  std::string format = "table";
  std::string out;
};

int cmd_expect(const ExpectArgs& a) {
  std::ostringstream os;
  json doc = artifact_header("expect");
  json results = json::object();
  const bool js = a.format == "json";

  if (a.class_matrix) {
    if (a.n < 3) throw std::domain_error("--class-matrix needs --n >= 3");
    json rows = json::array();
    os << "class/zone expectation matrix, n=" << a.n << " (rows s,m,l | columns S,M,L)\n";
    for (int ci = 0; ci < 3; ++ci) {
      json row = json::array();
      os << analytic::element_class_name(static_cast<analytic::ElementClass>(ci)) << ":";
      for (int zi = 0; zi < 3; ++zi) {
        const Rational v = analytic::class_position_mean(
            static_cast<analytic::ElementClass>(ci), static_cast<analytic::PositionZone>(zi),
            a.n);
        row.push_back(v.str());
        os << "  " << fmt_rational(v);
      }
      os << "\n";
      rows.push_back(row);
    }
    results["class_matrix"] = rows;
  } else if (a.case_two) {
    if (a.n < 3 || a.q < 0) throw std::domain_error("--case2 needs --n >= 3 and --q");
    const Rational v = analytic::case_two_probability(a.n, a.q);
    os << fmt_rational(v) << "\n";
    results["case_two_probability"] = v.str();
  } else if (a.decomposition) {
    const AlgorithmId alg = parse_algorithm(a.alg.empty() ? "yaroslavskiy" : a.alg);
    if (a.n < 3) throw std::domain_error("--decomposition needs --n >= 3");
    const auto d = analytic::partition_comparison_decomposition(alg, a.n);
    os << "first-step comparison decomposition, " << algorithm_name(alg) << ", n=" << a.n
       << "\n";
    os << "scan base: " << fmt_rational(d.scan_base) << "\n";
    json terms = json::array();
    for (const auto& t : d.terms) {
      os << "  " << analytic::element_class_name(t.elem) << "@"
         << analytic::position_zone_name(t.zone) << " = " << fmt_rational(t.value)
         << (t.expensive ? "   (expensive)" : "") << "\n";
      terms.push_back({{"class", analytic::element_class_name(t.elem)},
                       {"zone", analytic::position_zone_name(t.zone)},
                       {"value", t.value.str()},
                       {"expensive", t.expensive}});
    }
    os << "total: " << fmt_rational(d.total)
       << "   slope: " << fmt_rational(d.leading_coefficient) << "\n";
    results["decomposition"] = {{"scan_base", d.scan_base.str()},
                                {"terms", terms},
                                {"total", d.total.str()},
                                {"leading_coefficient", d.leading_coefficient.str()}};
  } else if (a.asymptotics) {
    json rows = json::array();
    const auto one = [&](AlgorithmId alg, CostKind kind) {
      const auto c = analytic::asymptotic_coefficients(alg, kind);
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-13s %-12s alpha=%-9.6g beta=%.6g\n",
                    algorithm_name(alg), cost_kind_name(kind), c.alpha, c.beta);
      os << buf;
      rows.push_back({{"alg", algorithm_name(alg)},
                      {"kind", cost_kind_name(kind)},
                      {"alpha", c.alpha},
                      {"beta", c.beta},
                      {"alpha_exact", c.alpha_exact.str()}});
    };
    if (a.alg.empty()) {
      for (AlgorithmId alg : kAllAlgorithms)
        for (CostKind kind : kAllCostKinds) one(alg, kind);
    } else {
      one(parse_algorithm(a.alg), parse_cost_kind(a.kind));
    }
    results["asymptotics"] = rows;
  } else if (a.conditional) {
    const AlgorithmId alg = parse_algorithm(a.alg);
    const CostKind kind = parse_cost_kind(a.kind);
    const Rational v = analytic::conditional_partition_cost(alg, kind, a.n, a.p, a.q);
    os << fmt_rational(v) << "\n";
    results["conditional_partition_cost"] = v.str();
  } else if (a.partition) {
    const AlgorithmId alg = parse_algorithm(a.alg);
    const CostKind kind = parse_cost_kind(a.kind);
    const Rational v = analytic::expected_partition_cost(alg, kind, a.n);
    os << fmt_rational(v) << "\n";
    results["expected_partition_cost"] = v.str();
  } else {
    const AlgorithmId alg = parse_algorithm(a.alg);
    const CostKind kind = parse_cost_kind(a.kind);
    if (a.n < 0) throw std::domain_error("expect needs --n >= 0");
    const Rational v = analytic::expected_total_cost(alg, kind, a.n);
    os << fmt_rational(v) << "\n";
    results["expected_total_cost"] = v.str();
  }

  if (js) {
    doc["config"] = {{"alg", a.alg}, {"kind", a.kind}, {"n", a.n}};
    doc["results"] = results;
    emit(doc.dump(2) + "\n", a.out);
  } else {
    emit(os.str(), a.out);
  }
  return 0;
}

// -------------------------------------------------------------- verify --

struct VerifyArgs {
  bool all = false;
  bool totals = false;
  bool partition = false;
  bool conditionals = false;
  bool lemma = false;
  bool randomness = false;
  bool class_matrix = false;
  bool recurrence = false;
  std::string alg;  // restrict randomness/totals checks to one algorithm
  int n = -1;       // run a single size instead of the whole range
  int max_n = -1;
  std::string format = "table";
  std::string out;
};

struct CheckRecorder {
  json checks = json::array();
  std::ostringstream table;
  int failures = 0;

  void add(const std::string& check, const std::string& detail, const std::string& expected,
           const std::string& actual) {
    const bool pass = expected == actual;
    failures += pass ? 0 : 1;
    checks.push_back({{"check", check},
                      {"detail", detail},
                      {"expected", expected},
                      {"actual", actual},
                      {"pass", pass}});
    table << (pass ? "PASS " : "FAIL ") << check << "  " << detail;
    if (!pass) table << "  expected=" << expected << " actual=" << actual;
    table << "\n";
  }
};

std::vector<AlgorithmId> algs_filter(const std::string& alg, bool dual_only) {
  if (!alg.empty()) return {parse_algorithm(alg)};
  if (dual_only)
    return {kDualPivotAlgorithms.begin(), kDualPivotAlgorithms.end()};
  return {kAllAlgorithms.begin(), kAllAlgorithms.end()};
}

std::pair<int, int> check_range(int lo, int hi, const VerifyArgs& a) {
  if (a.n >= 0) return {a.n, a.n};
  if (a.max_n >= 0) hi = std::min(hi, a.max_n);
  return {lo, hi};
}

void verify_totals(const VerifyArgs& a, const oracle::EnumerationLimits& lim, CheckRecorder& rec) {
  const auto [lo, hi] = check_range(2, lim.totals, a);
  for (AlgorithmId alg : algs_filter(a.alg, false))
    for (CostKind kind : kAllCostKinds)
      for (int n = lo; n <= hi; ++n) {
        const auto rep = oracle::enumerate_total(alg, kind, n, lim);
        rec.add("totals",
                std::string(algorithm_name(alg)) + " " + cost_kind_name(kind) +
                    " n=" + std::to_string(n),
                analytic::expected_total_cost(alg, kind, n).str(), rep.exact_mean.str());
      }
}

void verify_partition(const VerifyArgs& a, const oracle::EnumerationLimits& lim,
                      CheckRecorder& rec) {
  const auto [lo, hi] = check_range(3, lim.partition, a);
  for (AlgorithmId alg : algs_filter(a.alg, true))
    for (CostKind kind : kAllCostKinds)
      for (int n = lo; n <= hi; ++n) {
        const auto rep = oracle::enumerate_partition(alg, kind, n, lim);
        rec.add("partition",
                std::string(algorithm_name(alg)) + " " + cost_kind_name(kind) +
                    " n=" + std::to_string(n),
                analytic::expected_partition_cost(alg, kind, n).str(), rep.exact_mean.str());
      }
}

void verify_conditionals(const VerifyArgs& a, const oracle::EnumerationLimits& lim,
                         CheckRecorder& rec) {
  const auto [lo, hi] = check_range(3, std::min(8, lim.partition), a);
  const std::pair<AlgorithmId, CostKind> families[] = {
      {AlgorithmId::YaroslavskiyDual, CostKind::Comparisons},
      {AlgorithmId::YaroslavskiyDual, CostKind::Swaps},
      {AlgorithmId::SedgewickDual, CostKind::Comparisons}};
  for (const auto& [alg, kind] : families)
    for (int n = lo; n <= hi; ++n) {
      const auto rep = oracle::enumerate_partition(alg, kind, n, lim);
      bool all_match = true;
      std::string first_bad;
      for (const auto& [pq, mean] : rep.per_pivot_means) {
        const Rational want =
            analytic::conditional_partition_cost(alg, kind, n, pq.first, pq.second);
        if (mean != want && first_bad.empty()) {
          all_match = false;
          first_bad = "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) +
                      ") " + mean.str() + " vs " + want.str();
        }
      }
      rec.add("conditionals",
              std::string(algorithm_name(alg)) + " " + cost_kind_name(kind) +
                  " n=" + std::to_string(n) + " all pivot pairs",
              "match", all_match ? "match" : first_bad);
    }
}

void verify_lemma(const VerifyArgs& a, const oracle::EnumerationLimits& lim, CheckRecorder& rec) {
  const auto [lo, hi] = check_range(3, lim.totals, a);
  for (int n = lo; n <= hi; ++n) {
    const auto rep = oracle::verify_case_two_lemma(n, lim);
    rec.add("lemma", "equivalence n=" + std::to_string(n), "holds",
            rep.equivalence_holds ? "holds" : "violated");
    rec.add("lemma", "frequencies n=" + std::to_string(n), "exact",
            rep.frequencies_exact ? "exact" : "off");
  }
}

void verify_randomness(const VerifyArgs& a, const oracle::EnumerationLimits& lim,
                       CheckRecorder& rec) {
  const auto [lo, hi] = check_range(3, std::min(6, lim.randomness), a);
  for (AlgorithmId alg : algs_filter(a.alg, false))
    for (int n = lo; n <= hi; ++n) {
      const auto rep = oracle::verify_randomness_preservation(alg, n, lim);
      rec.add("randomness", std::string(algorithm_name(alg)) + " n=" + std::to_string(n),
              "uniform", rep.uniform ? "uniform" : "nonuniform");
    }
}

void verify_class_matrix(const VerifyArgs& a, const oracle::EnumerationLimits& lim,
                         CheckRecorder& rec) {
  const auto [lo, hi] = check_range(3, lim.totals, a);
  for (int n = lo; n <= hi; ++n) {
    const auto m = oracle::enumerate_class_positions(n, lim);
    bool match = true;
    for (int ci = 0; ci < 3; ++ci)
      for (int zi = 0; zi < 3; ++zi)
        if (m[static_cast<std::size_t>(ci)][static_cast<std::size_t>(zi)] !=
            analytic::class_position_mean(static_cast<analytic::ElementClass>(ci),
                                          static_cast<analytic::PositionZone>(zi), n))
          match = false;
    rec.add("class-matrix", "n=" + std::to_string(n), "match", match ? "match" : "mismatch");
  }
}

void verify_recurrence(CheckRecorder& rec) {
  std::mt19937_64 rng(20240901);
  const auto rr = [&rng]() {
    const long num = static_cast<long>(rng() % 199) - 99;
    const long den = static_cast<long>(rng() % 20) + 1;
    return qslab::Rational(num, den);
  };
  std::vector<analytic::RecurrenceParams> params;
  for (AlgorithmId alg : kDualPivotAlgorithms)
    for (CostKind kind : kAllCostKinds) params.push_back(analytic::recurrence_params(alg, kind));
  for (int i = 0; i < 3; ++i) params.push_back({rr(), rr(), rr()});

  bool closed_ok = true;
  for (const auto& p : params) {
    const auto c = analytic::total_cost_by_recurrence(
        [&p](long n) { return p.a * qslab::Rational(n + 1) + p.b; }, p.d, 200);
    for (long n = 4; n <= 200; ++n)
      if (c[static_cast<std::size_t>(n)] != analytic::total_cost_closed_form(p, n))
        closed_ok = false;
  }
  rec.add("recurrence", "closed form == iterated recurrence, n=4..200", "equal",
          closed_ok ? "equal" : "different");

  const auto sed = analytic::total_cost_by_recurrence(
      [](long n) {
        return analytic::expected_partition_cost(AlgorithmId::SedgewickDual,
                                                 CostKind::Comparisons, n);
      },
      qslab::Rational(2), 50);
  bool sed_ok = true;
  for (long n = 4; n <= 50; ++n)
    if (sed[static_cast<std::size_t>(n)] !=
        analytic::expected_total_cost(AlgorithmId::SedgewickDual, CostKind::Comparisons, n))
      sed_ok = false;
  rec.add("recurrence", "exact sedgewick comparison cost reproduces the total formula, n<=50",
          "equal", sed_ok ? "equal" : "different");

  bool err_ok = true;
  const analytic::RecurrenceParams lin{qslab::Rational(16, 9), qslab::Rational(-3),
                                       qslab::Rational(2)};
  for (long n = 4; n <= 200; ++n) {
    const qslab::Rational diff =
        analytic::total_cost_closed_form(lin, n) -
        analytic::expected_total_cost(AlgorithmId::SedgewickDual, CostKind::Comparisons, n);
    if (diff != qslab::Rational(n + 1, 90)) err_ok = false;
  }
  rec.add("recurrence", "linearized sedgewick overestimate == (n+1)/90", "equal",
          err_ok ? "equal" : "different");

  const auto dy =
      analytic::partition_comparison_decomposition(AlgorithmId::YaroslavskiyDual, 20);
  const auto ds = analytic::partition_comparison_decomposition(AlgorithmId::SedgewickDual, 20);
  const auto count_exp = [](const analytic::Decomposition& d) {
    int c = 0;
    for (const auto& t : d.terms) c += t.expensive ? 1 : 0;
    return c;
  };
  rec.add("decomposition", "yaroslavskiy expensive terms", "1",
          std::to_string(count_exp(dy)));
  rec.add("decomposition", "sedgewick expensive terms", "3", std::to_string(count_exp(ds)));
  rec.add("decomposition", "yaroslavskiy slope", "19/12", dy.leading_coefficient.str());
  rec.add("decomposition", "yaroslavskiy total == first-step comparisons",
          analytic::expected_partition_cost(AlgorithmId::YaroslavskiyDual,
                                            CostKind::Comparisons, 20)
              .str(),
          dy.total.str());
}

int cmd_verify(const VerifyArgs& a) {
  const oracle::EnumerationLimits lim = env_limits();
  CheckRecorder rec;
  const bool everything = a.all || (!a.totals && !a.partition && !a.conditionals && !a.lemma &&
                                    !a.randomness && !a.class_matrix && !a.recurrence);
  if (a.totals || everything) verify_totals(a, lim, rec);
  if (a.partition || everything) verify_partition(a, lim, rec);
  if (a.conditionals || everything) verify_conditionals(a, lim, rec);
  if (a.lemma || everything) verify_lemma(a, lim, rec);
  if (a.randomness || everything) verify_randomness(a, lim, rec);
  if (a.class_matrix || everything) verify_class_matrix(a, lim, rec);
  if (a.recurrence || everything) verify_recurrence(rec);

  const bool pass = rec.failures == 0;
  if (a.format == "json") {
    json doc = artifact_header("verify");
    doc["config"] = {{"all", a.all}, {"n", a.n}, {"max_n", a.max_n}, {"alg", a.alg},
                     {"caps", {{"totals", lim.totals},
                               {"partition", lim.partition},
                               {"randomness", lim.randomness}}}};
    doc["results"] = rec.checks;
    doc["pass"] = pass;
    emit(doc.dump(2) + "\n", a.out);
  } else {
    std::ostringstream os;
    os << rec.table.str();
    os << (pass ? "all checks passed" : std::to_string(rec.failures) + " check(s) failed")
       << " (" << rec.checks.size() << " run)\n";
    emit(os.str(), a.out);
  }
  return pass ? 0 : kExitCheckFailed;
}

// ------------------------------------------------------------ simulate --

struct SimulateArgs {
  std::string alg = "yaroslavskiy";
  std::string kind = "comparisons";
  int n = 1000;
  long trials = 10000;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string format = "table";
  std::string out;
};

int cmd_simulate(const SimulateArgs& a) {
  const AlgorithmId alg = parse_algorithm(a.alg);
  const CostKind kind = parse_cost_kind(a.kind);
  const auto est = montecarlo::estimate(alg, kind, a.n, a.trials, a.seed, a.threads);
  const double formula = analytic::expected_total_cost(alg, kind, a.n).to_double();
  const double z = est.std_error > 0 ? (est.mean - formula) / est.std_error : 0.0;

  std::ostringstream os;
  if (a.format == "json") {
    json doc = artifact_header("simulate");
    doc["config"] = {{"alg", a.alg}, {"kind", a.kind}, {"n", a.n},
                     {"trials", a.trials}, {"seed", a.seed}, {"threads", a.threads}};
    doc["results"] = {{"mean", est.mean},       {"std_error", est.std_error},
                      {"formula_value", formula}, {"z", z}};
    doc["pass"] = std::abs(z) <= 4.0;
    os << doc.dump(2) << "\n";
  } else if (a.format == "csv") {
    os << "alg,kind,n,trials,mean,std_error,formula_value,z,seed\n";
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%s,%d,%ld,%.10g,%.6g,%.10g,%.4f,%llu\n",
                  algorithm_name(alg), cost_kind_name(kind), a.n, a.trials, est.mean,
                  est.std_error, formula, z, static_cast<unsigned long long>(a.seed));
    os << buf;
  } else {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%s %s n=%d trials=%ld\n  mean=%.6f  std_error=%.6f\n  formula=%.6f  z=%.3f\n",
                  algorithm_name(alg), cost_kind_name(kind), a.n, a.trials, est.mean,
                  est.std_error, formula, z);
    os << buf;
  }
  emit(os.str(), a.out);
  return std::abs(z) <= 4.0 ? 0 : kExitCheckFailed;
}

// --------------------------------------------------------------- bench --

struct BenchArgs {
  std::vector<std::string> algs = {"classic", "sedgewick", "yaroslavskiy"};
  std::vector<std::string> sizes = {"1e3", "1e4", "1e5"};
  int reps = 1000;
  int warmup = 10;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_bench(const BenchArgs& a) {
  bench::GridConfig cfg;
  for (const auto& s : a.algs) cfg.algs.push_back(parse_algorithm(s));
  cfg.sizes = parse_sizes(a.sizes);
  cfg.repetitions = a.reps;
  cfg.warmup = a.warmup;
  cfg.seed = a.seed;
  const auto points = bench::run_grid(cfg);
  std::ostringstream os;
  bench::write_csv(os, points);
  emit(os.str(), a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quicksort cost laboratory: instrumented sorts, exact cost formulas, "
               "an exhaustive enumeration oracle, Monte Carlo estimation and a timing "
               "harness"};
  app.require_subcommand(1);
  const std::uint64_t default_seed = env_u64("QSLAB_SEED", 1);

  SortArgs sa;
  sa.seed = default_seed;
  auto* sort_cmd = app.add_subcommand("sort", "run one instrumented sort");
  sort_cmd->add_option("--alg", sa.alg, "classic | sedgewick | yaroslavskiy");
  std::string input_buf;
  auto* input_opt = sort_cmd->add_option("--input", input_buf, "comma-separated keys (a permutation of 1..n)");
  sort_cmd->add_option("--input-file", sa.input_file, "file with comma- or newline-separated keys");
  sort_cmd->add_option("--n", sa.n, "generate a random permutation of this size");
  sort_cmd->add_option("--seed", sa.seed, "seed for --n generation");
  sort_cmd->add_flag("--partition-only", sa.partition_only, "run a single partitioning step");
  sort_cmd->add_option("--format", sa.format, "table | json")->check(CLI::IsMember({"table", "json"}));
  sort_cmd->add_option("--out", sa.out, "write output to this file");

  ExpectArgs ea;
  auto* expect_cmd = app.add_subcommand("expect", "evaluate exact cost formulas");
  expect_cmd->add_option("--alg", ea.alg, "classic | sedgewick | yaroslavskiy");
  expect_cmd->add_option("--kind", ea.kind, "comparisons | swaps");
  expect_cmd->add_option("--n", ea.n, "input size");
  expect_cmd->add_option("--p", ea.p, "small pivot rank (with --conditional)");
  expect_cmd->add_option("--q", ea.q, "large pivot rank (with --conditional or --case2)");
  expect_cmd->add_flag("--partition", ea.partition, "expected first-step cost");
  expect_cmd->add_flag("--conditional", ea.conditional, "first-step cost given pivots (p,q)");
  expect_cmd->add_flag("--class-matrix", ea.class_matrix, "3x3 class/zone expectation matrix");
  expect_cmd->add_flag("--case2", ea.case_two, "probability of the k=g+2 loop exit");
  expect_cmd->add_flag("--decomposition", ea.decomposition, "six-term comparison decomposition");
  expect_cmd->add_flag("--asymptotics", ea.asymptotics, "alpha/beta of alpha n ln n + beta n");
  expect_cmd->add_option("--format", ea.format, "table | json")->check(CLI::IsMember({"table", "json"}));
  expect_cmd->add_option("--out", ea.out, "write output to this file");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "enumeration checks of the formulas");
  verify_cmd->add_flag("--all", va.all, "run every check family (default)");
  verify_cmd->add_flag("--totals", va.totals, "full-sort totals vs formulas");
  verify_cmd->add_flag("--partition", va.partition, "first-step costs vs formulas");
  verify_cmd->add_flag("--conditionals", va.conditionals, "per-pivot-pair conditional costs");
  verify_cmd->add_flag("--lemma", va.lemma, "case-two exit criterion + frequencies");
  verify_cmd->add_flag("--randomness", va.randomness, "subfile arrangement uniformity");
  verify_cmd->add_flag("--class-matrix", va.class_matrix, "class/zone expectation matrix");
  verify_cmd->add_flag("--recurrence", va.recurrence, "closed form vs iterated recurrence");
  verify_cmd->add_option("--alg", va.alg, "restrict checks to one algorithm");
  verify_cmd->add_option("--n", va.n, "check a single size only");
  verify_cmd->add_option("--max-n", va.max_n, "clamp the upper end of every size range");
  verify_cmd->add_option("--format", va.format, "table | json")->check(CLI::IsMember({"table", "json"}));
  verify_cmd->add_option("--out", va.out, "write output to this file");

  SimulateArgs ma;
  ma.seed = default_seed;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate vs formula");
  sim_cmd->add_option("--alg", ma.alg, "classic | sedgewick | yaroslavskiy");
  sim_cmd->add_option("--kind", ma.kind, "comparisons | swaps");
  sim_cmd->add_option("--n", ma.n, "input size")->check(CLI::Range(2, 100000000));
  sim_cmd->add_option("--trials", ma.trials, "number of random permutations");
  sim_cmd->add_option("--seed", ma.seed, "RNG seed");
  sim_cmd->add_option("--threads", ma.threads, "worker threads (results are thread-count independent)");
  sim_cmd->add_option("--format", ma.format, "table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  sim_cmd->add_option("--out", ma.out, "write output to this file");

  BenchArgs ba;
  ba.seed = default_seed;
  auto* bench_cmd = app.add_subcommand("bench", "wall-clock timing grid (CSV)");
  bench_cmd->add_option("--algs", ba.algs, "algorithms to time");
  bench_cmd->add_option("--sizes", ba.sizes, "comma-separated sizes, 1e4 notation accepted");
  bench_cmd->add_option("--reps", ba.reps, "repetitions per grid cell");
  bench_cmd->add_option("--warmup", ba.warmup, "discarded warm-up repetitions");
  bench_cmd->add_option("--seed", ba.seed, "input generation seed");
  bench_cmd->add_option("--out", ba.out, "write CSV to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sort_cmd) {
      if (input_opt->count() > 0) sa.input = input_buf;
      return cmd_sort(sa);
    }
    if (*expect_cmd) return cmd_expect(ea);
    if (*verify_cmd) return cmd_verify(va);
    if (*sim_cmd) return cmd_simulate(ma);
    if (*bench_cmd) return cmd_bench(ba);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}

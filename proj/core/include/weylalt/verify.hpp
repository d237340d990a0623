#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylalt/altset.hpp"
#include "weylalt/multiplicity.hpp"

namespace weylalt {

/// The closed-form claims this library can audit against brute force or
/// symbolic expansion.  Each suite runs over a rank range and produces a
/// report; a suite passes exactly when it finds no counterexamples.
///
///  - fibonacci: brute-force |A(highest_root, 0)| equals the Fibonacci
///    number F(r), and the direct commuting-reflection construction yields
///    the same set.
///  - level_counts: the number of length-k elements of A(highest_root, 0)
///    found by brute force equals C(r-1-k, k), with maximum length
///    floor((r-1)/2).
///  - closed_partition: for every sigma in A(highest_root, 0), the DP
///    evaluation of the q-analog equals q^(1+len) (1+q)^(r-1-2len) and the
///    plain count equals 2^(r-1-2len).
///  - exponents: the full Weyl sum for the q-graded multiplicity of 0 in
///    the adjoint representation equals q + q^2 + ... + q^r, and its value
///    at q = 1 equals r.
///  - wilf_identity: the alternating binomial identity behind the
///    exponents result, expanded symbolically: sum_k (-1)^k C(r-1-k, k)
///    q^(1+k) (1+q)^(r-1-2k) = q + ... + q^r.
///  - nonzero_weights: for every dominant mu != 0 with fundamental
///    coefficients in [0,3], A(highest_root, mu) is {identity} when mu is
///    the highest root and empty otherwise, by brute force and by the
///    direct construction.
///  - adjoint_table: over all integer weights with entries in [-2,2], the
///    full Weyl sum gives multiplicity rank at 0, one on the n(n-1) roots,
///    and zero elsewhere, matching the classification shortcut.
///  - positivity_equivalence: over all integer vectors with entries in
///    [-4,4] and coordinate sum zero, the O(n) positivity test agrees with
///    kostant(target) > 0.
enum class Suite {
  fibonacci,
  level_counts,
  closed_partition,
  exponents,
  wilf_identity,
  nonzero_weights,
  adjoint_table,
  positivity_equivalence,
};

/// All suites, in declaration order.
const std::vector<Suite>& all_suites();

const char* suite_name(Suite suite);

/// Throws InvalidInputError for an unknown name.
Suite suite_from_name(const std::string& name);

/// Rank range a suite covers when the caller does not pick one.
std::pair<int, int> default_rank_range(Suite suite);

/// A failed check, with everything needed to reproduce it by hand.
struct Counterexample {
  int rank = 0;
  std::string witness;
  std::string expected;
  std::string actual;
};

struct RankSummary {
  int rank = 0;
  std::uint64_t checks = 0;  // individual comparisons performed at this rank
  std::string note;          // short human-readable detail, e.g. "cardinality=34"
};

struct RankTiming {
  int rank = 0;
  std::int64_t millis = 0;
};

struct VerificationReport {
  Suite suite = Suite::fibonacci;
  int rank_lo = 0;
  int rank_hi = 0;
  /// False when the budget ran out; the report then covers only the ranks
  /// listed in per_rank and says so in notes (it is never silently
  /// truncated).
  bool complete = true;
  std::vector<Counterexample> counterexamples;
  std::vector<RankSummary> per_rank;
  std::vector<RankTiming> timings;
  std::vector<std::string> notes;

  /// A suite passes exactly when it found no counterexamples.
  bool passed() const { return counterexamples.empty(); }
  const char* status() const { return passed() ? "pass" : "fail"; }
};

struct SuiteOptions {
  /// Wall-clock budget in milliseconds, checked between ranks; negative
  /// means unlimited.
  std::int64_t budget_ms = -1;
  /// Worker threads for the enumeration-heavy checks; 0 = automatic.
  unsigned threads = 1;
  /// Ceiling forwarded to the n!-enumeration primitives.
  int max_n = 10;
};

/// Runs one suite over [rank_lo, rank_hi], collecting every counterexample
/// rather than stopping at the first.
VerificationReport run_suite(Suite suite, int rank_lo, int rank_hi,
                             const SuiteOptions& options = {});

/// Runs one suite over its default rank range.
VerificationReport run_suite(Suite suite, const SuiteOptions& options = {});

/// Timing table contrasting the full Weyl sum with the positivity-pruned
/// one on the q-graded zero-weight multiplicity.  Both backends must agree
/// exactly; the point is the term count (n! versus the Fibonacci number
/// F(r)) and the wall-clock gap.
struct PruningBenchRow {
  int rank = 0;
  std::uint64_t full_terms = 0;
  std::uint64_t pruned_terms = 0;
  std::int64_t full_millis = 0;
  std::int64_t pruned_millis = 0;
  bool values_equal = false;
};

std::vector<PruningBenchRow> bench_pruning(int rank_lo, int rank_hi,
                                           const SuiteOptions& options = {});

}  // namespace weylalt

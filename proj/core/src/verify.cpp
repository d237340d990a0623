#include "weylalt/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "weylalt/errors.hpp"

namespace weylalt {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

std::string coeff_list(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out << ",";
    out << v[k];
  }
  out << "]";
  return out.str();
}

// All integer vectors with entries in [-bound, bound] and coordinate sum
// zero, in lexicographic order.
void for_each_grid_vector(int n, int bound,
                          const std::function<void(const EpsVector&)>& fn) {
  std::vector<std::int64_t> v(n, -bound);
  while (true) {
    std::int64_t head = 0;
    for (int k = 0; k < n - 1; ++k) head += v[k];
    const std::int64_t last = -head;
    if (last >= -bound && last <= bound) {
      v[n - 1] = last;
      fn(EpsVector(v));
    }
    int k = n - 2;
    while (k >= 0 && v[k] == bound) {
      v[k] = -bound;
      --k;
    }
    if (k < 0) break;
    ++v[k];
  }
}

struct SuiteRun {
  VerificationReport report;
  Clock::time_point started = Clock::now();

  explicit SuiteRun(Suite suite, int lo, int hi) {
    report.suite = suite;
    report.rank_lo = lo;
    report.rank_hi = hi;
  }

  void fail(int rank, std::string witness, std::string expected,
            std::string actual) {
    report.counterexamples.push_back(Counterexample{
        rank, std::move(witness), std::move(expected), std::move(actual)});
  }

  bool budget_left(const SuiteOptions& options, int next_rank) {
    if (options.budget_ms < 0 || ms_since(started) <= options.budget_ms)
      return true;
    report.complete = false;
    report.notes.push_back("budget of " + std::to_string(options.budget_ms) +
                           " ms exhausted before rank " +
                           std::to_string(next_rank) +
                           "; remaining ranks were not checked");
    return false;
  }
};

void run_fibonacci(SuiteRun& run, int r, const SuiteOptions& options) {
  RankContext ctx(r);
  AltSetOptions aopt;
  aopt.max_n = options.max_n;
  aopt.threads = options.threads;
  const AltSet brute =
      alternation_set(ctx, ctx.highest_root(), EpsVector::zero(ctx.n()), aopt);
  const AltSet closed = zero_weight_alternation_set(ctx);
  const Bigint expected = fibonacci(static_cast<unsigned long>(r));

  if (Bigint(static_cast<long>(brute.cardinality())) != expected)
    run.fail(r, "brute-force A(highest_root, 0)", expected.get_str(),
             std::to_string(brute.cardinality()));
  if (!(brute == closed))
    run.fail(r,
             "commuting-reflection construction vs brute force (element sets)",
             "identical element lists",
             "cardinalities " + std::to_string(closed.cardinality()) + " vs " +
                 std::to_string(brute.cardinality()) + " or differing elements");

  run.report.per_rank.push_back(
      RankSummary{r, factorial(ctx.n()),
                  "cardinality=" + std::to_string(brute.cardinality())});
}

void run_level_counts(SuiteRun& run, int r, const SuiteOptions& options) {
  RankContext ctx(r);
  AltSetOptions aopt;
  aopt.max_n = options.max_n;
  aopt.threads = options.threads;
  const AltSet brute =
      alternation_set(ctx, ctx.highest_root(), EpsVector::zero(ctx.n()), aopt);
  const auto counts = brute.level_counts();
  const int max_len = max_alternation_length(ctx);

  std::uint64_t checks = 0;
  std::ostringstream note;
  note << "levels=";
  for (int k = 0; k <= max_len; ++k) {
    const Bigint expected = binomial(static_cast<unsigned long>(r - 1 - k),
                                     static_cast<unsigned long>(k));
    auto it = counts.find(k);
    const std::uint64_t got = it == counts.end() ? 0 : it->second;
    if (Bigint(static_cast<long>(got)) != expected)
      run.fail(r, "count of length-" + std::to_string(k) + " elements",
               expected.get_str(), std::to_string(got));
    note << (k ? "," : "") << got;
    ++checks;
  }
  for (const auto& [len, count] : counts) {
    if (len > max_len)
      run.fail(r, "element of length " + std::to_string(len),
               "no elements longer than " + std::to_string(max_len),
               std::to_string(count) + " elements");
  }
  if (brute.max_observed_length() != max_len)
    run.fail(r, "maximum observed length", std::to_string(max_len),
             std::to_string(brute.max_observed_length()));

  run.report.per_rank.push_back(RankSummary{r, checks, note.str()});
}

void run_closed_partition(SuiteRun& run, int r, const SuiteOptions&) {
  RankContext ctx(r);
  const AltSet closed = zero_weight_alternation_set(ctx);
  PartitionCache cache;

  std::uint64_t checks = 0;
  for (const AltSetElement& e : closed.elements()) {
    const int len = e.length;
    const unsigned tail = static_cast<unsigned>(r - 1 - 2 * len);
    const QPoly expected_q =
        QPoly::monomial(1 + static_cast<unsigned>(len)) * QPoly::one_plus_q_to(tail);
    const QPoly actual_q = kostant_q(ctx, e.translate, cache);
    if (actual_q != expected_q)
      run.fail(r,
               "q-analog at sigma=" + e.sigma.to_string() +
                   " translate=" + e.translate.to_string(),
               expected_q.to_string(), actual_q.to_string());

    const Bigint expected_c = pow2(tail);
    const Bigint actual_c = kostant(ctx, e.translate, cache);
    if (actual_c != expected_c)
      run.fail(r,
               "partition count at sigma=" + e.sigma.to_string() +
                   " translate=" + e.translate.to_string(),
               expected_c.get_str(), actual_c.get_str());
    checks += 2;
  }
  run.report.per_rank.push_back(
      RankSummary{r, checks,
                  "elements=" + std::to_string(closed.cardinality())});
}

void run_exponents(SuiteRun& run, int r, const SuiteOptions& options) {
  RankContext ctx(r);
  MultOptions mopt;
  mopt.max_n = options.max_n;
  mopt.threads = options.threads;
  const EpsVector zero = EpsVector::zero(ctx.n());

  const auto mq = mult_q(ctx, ctx.highest_root(), zero, Backend::full_sum, mopt);
  const QPoly expected = QPoly::geometric(1, static_cast<unsigned>(r));
  if (mq.value != expected)
    run.fail(r, "full Weyl sum, q-graded multiplicity of 0", expected.to_string(),
             mq.value.to_string());

  const auto m = mult(ctx, ctx.highest_root(), zero, Backend::full_sum, mopt);
  if (m.value != Bigint(static_cast<long>(r)))
    run.fail(r, "full Weyl sum, multiplicity of 0", std::to_string(r),
             m.value.get_str());

  if (mq.value.eval_at_one() != m.value)
    run.fail(r, "q-analog evaluated at 1 vs plain multiplicity",
             m.value.get_str(), mq.value.eval_at_one().get_str());

  run.report.per_rank.push_back(
      RankSummary{r, mq.terms_evaluated + m.terms_evaluated,
                  "m_q=" + mq.value.to_string()});
}

void run_wilf_identity(SuiteRun& run, int r, const SuiteOptions&) {
  QPoly lhs;
  for (int k = 0; 2 * k <= r - 1; ++k) {
    QPoly term = QPoly::monomial(static_cast<unsigned>(1 + k),
                                 binomial(static_cast<unsigned long>(r - 1 - k),
                                          static_cast<unsigned long>(k))) *
                 QPoly::one_plus_q_to(static_cast<unsigned>(r - 1 - 2 * k));
    if (k % 2 == 0)
      lhs += term;
    else
      lhs -= term;
  }
  const QPoly rhs = QPoly::geometric(1, static_cast<unsigned>(r));
  if (lhs != rhs)
    run.fail(r, "alternating binomial sum", rhs.to_string(), lhs.to_string());
  run.report.per_rank.push_back(RankSummary{r, 1, ""});
}

void run_nonzero_weights(SuiteRun& run, int r, const SuiteOptions& options) {
  RankContext ctx(r);
  AltSetOptions aopt;
  aopt.max_n = options.max_n;

  std::uint64_t checks = 0;
  std::vector<std::int64_t> coeffs(r, 0);
  while (true) {
    // advance the odometer over [0,3]^r, skipping the all-zero vector
    int k = r - 1;
    while (k >= 0 && coeffs[k] == 3) {
      coeffs[k] = 0;
      --k;
    }
    if (k < 0) break;
    ++coeffs[k];

    const EpsVector mu = from_fundamental_coeffs(ctx, coeffs);
    const bool is_highest = mu == ctx.highest_root();

    const AltSet brute = alternation_set(ctx, ctx.highest_root(), mu, aopt);
    const AltSet closed = nonzero_weight_alternation_set(ctx, mu);

    const std::size_t expected_card = is_highest ? 1 : 0;
    if (brute.cardinality() != expected_card ||
        (is_highest && !brute.elements()[0].sigma.is_identity()))
      run.fail(r, "A(highest_root, mu) for coeffs=" + coeff_list(coeffs),
               is_highest ? "{identity}" : "{}",
               std::to_string(brute.cardinality()) + " elements");
    if (!(brute == closed))
      run.fail(r, "direct construction vs brute force, coeffs=" + coeff_list(coeffs),
               "identical element lists", "differs");
    checks += 2;
  }
  run.report.per_rank.push_back(
      RankSummary{r, checks, "weights=" + std::to_string(checks / 2)});
}

void run_adjoint_table(SuiteRun& run, int r, const SuiteOptions& options) {
  RankContext ctx(r);
  MultOptions mopt;
  mopt.max_n = options.max_n;
  PartitionCache cache;
  mopt.cache = &cache;

  std::uint64_t checks = 0;
  std::uint64_t roots_seen = 0;
  for_each_grid_vector(ctx.n(), 2, [&](const EpsVector& mu) {
    long long expected = 0;
    if (mu.is_zero())
      expected = ctx.rank();
    else if (is_root(ctx, mu))
      expected = 1;
    if (is_root(ctx, mu)) ++roots_seen;

    const auto full = mult(ctx, ctx.highest_root(), mu, Backend::full_sum, mopt);
    if (full.value != Bigint(static_cast<long>(expected)))
      run.fail(r, "full Weyl sum at mu=" + mu.to_string(),
               std::to_string(expected), full.value.get_str());

    const long long adj = adjoint_multiplicity(ctx, mu);
    if (adj != expected)
      run.fail(r, "classification shortcut at mu=" + mu.to_string(),
               std::to_string(expected), std::to_string(adj));
    checks += 2;
  });

  const std::uint64_t expected_roots =
      static_cast<std::uint64_t>(ctx.n()) * (ctx.n() - 1);
  if (roots_seen != expected_roots)
    run.fail(r, "number of roots inside the coordinate box",
             std::to_string(expected_roots), std::to_string(roots_seen));

  run.report.per_rank.push_back(
      RankSummary{r, checks, "weights=" + std::to_string(checks / 2) +
                                 ",roots=" + std::to_string(roots_seen)});
}

void run_positivity_equivalence(SuiteRun& run, int r, const SuiteOptions&) {
  RankContext ctx(r);
  PartitionCache cache;
  std::uint64_t checks = 0;
  for_each_grid_vector(ctx.n(), 4, [&](const EpsVector& v) {
    const bool fast = is_positive(ctx, v);
    const bool slow = kostant(ctx, v, cache) > 0;
    if (fast != slow)
      run.fail(r, "target=" + v.to_string(),
               std::string("positivity test = ") + (slow ? "true" : "false"),
               fast ? "true" : "false");
    ++checks;
  });
  run.report.per_rank.push_back(
      RankSummary{r, checks, "vectors=" + std::to_string(checks)});
}

}  // namespace

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = {
      Suite::fibonacci,      Suite::level_counts,
      Suite::closed_partition, Suite::exponents,
      Suite::wilf_identity,  Suite::nonzero_weights,
      Suite::adjoint_table,  Suite::positivity_equivalence,
  };
  return suites;
}

const char* suite_name(Suite suite) {
  switch (suite) {
    case Suite::fibonacci:
      return "fibonacci";
    case Suite::level_counts:
      return "level_counts";
    case Suite::closed_partition:
      return "closed_partition";
    case Suite::exponents:
      return "exponents";
    case Suite::wilf_identity:
      return "wilf_identity";
    case Suite::nonzero_weights:
      return "nonzero_weights";
    case Suite::adjoint_table:
      return "adjoint_table";
    case Suite::positivity_equivalence:
      return "positivity_equivalence";
  }
  return "unknown";
}

Suite suite_from_name(const std::string& name) {
  for (Suite s : all_suites())
    if (name == suite_name(s)) return s;
  throw InvalidInputError("unknown suite '" + name + "'");
}

std::pair<int, int> default_rank_range(Suite suite) {
  switch (suite) {
    case Suite::fibonacci:
    case Suite::level_counts:
      return {1, 9};
    case Suite::closed_partition:
    case Suite::exponents:
      return {1, 8};
    case Suite::wilf_identity:
      return {1, 200};
    case Suite::nonzero_weights:
      return {3, 4};
    case Suite::adjoint_table:
      return {1, 5};
    case Suite::positivity_equivalence:
      return {1, 3};
  }
  return {1, 1};
}

VerificationReport run_suite(Suite suite, int rank_lo, int rank_hi,
                             const SuiteOptions& options) {
  if (rank_lo < 1 || rank_hi < rank_lo)
    throw InvalidRankError("run_suite: need 1 <= rank_lo <= rank_hi");

  SuiteRun run(suite, rank_lo, rank_hi);
  for (int r = rank_lo; r <= rank_hi; ++r) {
    if (!run.budget_left(options, r)) break;
    const Clock::time_point rank_start = Clock::now();
    switch (suite) {
      case Suite::fibonacci:
        run_fibonacci(run, r, options);
        break;
      case Suite::level_counts:
        run_level_counts(run, r, options);
        break;
      case Suite::closed_partition:
        run_closed_partition(run, r, options);
        break;
      case Suite::exponents:
        run_exponents(run, r, options);
        break;
      case Suite::wilf_identity:
        run_wilf_identity(run, r, options);
        break;
      case Suite::nonzero_weights:
        run_nonzero_weights(run, r, options);
        break;
      case Suite::adjoint_table:
        run_adjoint_table(run, r, options);
        break;
      case Suite::positivity_equivalence:
        run_positivity_equivalence(run, r, options);
        break;
    }
    run.report.timings.push_back(RankTiming{r, ms_since(rank_start)});
  }
  return run.report;
}

VerificationReport run_suite(Suite suite, const SuiteOptions& options) {
  const auto [lo, hi] = default_rank_range(suite);
  return run_suite(suite, lo, hi, options);
}

std::vector<PruningBenchRow> bench_pruning(int rank_lo, int rank_hi,
                                           const SuiteOptions& options) {
  if (rank_lo < 1 || rank_hi < rank_lo)
    throw InvalidRankError("bench_pruning: need 1 <= rank_lo <= rank_hi");

  std::vector<PruningBenchRow> rows;
  for (int r = rank_lo; r <= rank_hi; ++r) {
    RankContext ctx(r);
    MultOptions mopt;
    mopt.max_n = options.max_n;
    mopt.threads = options.threads;
    const EpsVector zero = EpsVector::zero(ctx.n());

    PruningBenchRow row;
    row.rank = r;

    Clock::time_point t0 = Clock::now();
    const auto full =
        mult_q(ctx, ctx.highest_root(), zero, Backend::full_sum, mopt);
    row.full_millis = ms_since(t0);
    row.full_terms = full.terms_evaluated;

    t0 = Clock::now();
    const auto pruned =
        mult_q(ctx, ctx.highest_root(), zero, Backend::positivity_pruned, mopt);
    row.pruned_millis = ms_since(t0);
    row.pruned_terms = pruned.terms_evaluated;

    row.values_equal = full.value == pruned.value;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace weylalt

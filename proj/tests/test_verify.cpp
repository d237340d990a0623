#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "weylalt/verify.hpp"

using namespace weylalt;

TEST_CASE("suite names round trip") {
  for (Suite s : all_suites()) {
    CHECK(suite_from_name(suite_name(s)) == s);
    auto range = default_rank_range(s);
    CHECK(range.first >= 1);
    CHECK(range.first <= range.second);
  }
  CHECK(all_suites().size() == 8);
  CHECK_THROWS_AS(suite_from_name("no_such_suite"), InvalidInputError);
  CHECK(std::string(suite_name(Suite::fibonacci)) == "fibonacci");
  CHECK(std::string(suite_name(Suite::positivity_equivalence)) ==
        "positivity_equivalence");
  CHECK(default_rank_range(Suite::fibonacci) == std::pair<int, int>{1, 9});
  CHECK(default_rank_range(Suite::wilf_identity) == std::pair<int, int>{1, 200});
}

TEST_CASE("every suite passes on a trimmed rank range") {
  struct Run {
    Suite suite;
    int lo;
    int hi;
  };
  const Run runs[] = {
      {Suite::fibonacci, 1, 6},
      {Suite::level_counts, 1, 6},
      {Suite::closed_partition, 1, 6},
      {Suite::exponents, 1, 5},
      {Suite::wilf_identity, 1, 80},
      {Suite::nonzero_weights, 3, 3},
      {Suite::adjoint_table, 1, 3},
      {Suite::positivity_equivalence, 1, 3},
  };
  for (const Run& run : runs) {
    CAPTURE(suite_name(run.suite));
    VerificationReport report = run_suite(run.suite, run.lo, run.hi);
    CHECK(report.passed());
    CHECK(report.complete);
    CHECK(std::string(report.status()) == "pass");
    CHECK(report.suite == run.suite);
    CHECK(report.rank_lo == run.lo);
    CHECK(report.rank_hi == run.hi);
    CHECK(report.counterexamples.empty());
    CHECK(report.per_rank.size() ==
          static_cast<std::size_t>(run.hi - run.lo + 1));
    CHECK(report.timings.size() == report.per_rank.size());
    for (std::size_t k = 0; k < report.per_rank.size(); ++k) {
      CHECK(report.per_rank[k].rank == run.lo + static_cast<int>(k));
      CHECK(report.per_rank[k].checks > 0);
    }
  }
}

TEST_CASE("fibonacci suite records cardinalities") {
  VerificationReport report = run_suite(Suite::fibonacci, 1, 6);
  REQUIRE(report.per_rank.size() == 6);
  const char* expect[] = {"cardinality=1", "cardinality=1", "cardinality=2",
                          "cardinality=3", "cardinality=5", "cardinality=8"};
  for (std::size_t k = 0; k < 6; ++k)
    CHECK(report.per_rank[k].note == expect[k]);
}

TEST_CASE("rank range validation") {
  CHECK_THROWS_AS(run_suite(Suite::fibonacci, 0, 3), InvalidRankError);
  CHECK_THROWS_AS(run_suite(Suite::fibonacci, 5, 3), InvalidRankError);
}

TEST_CASE("budget exhaustion flags the report as incomplete") {
  SuiteOptions opt;
  opt.budget_ms = 0;
  VerificationReport report = run_suite(Suite::fibonacci, 1, 9, opt);
  CHECK_FALSE(report.complete);
  CHECK(report.passed());
  CHECK(report.per_rank.size() < 9);
  REQUIRE_FALSE(report.notes.empty());
  CHECK(report.notes.back().find("budget") != std::string::npos);
}

TEST_CASE("thread count does not change a report") {
  SuiteOptions threads3;
  threads3.threads = 3;
  VerificationReport a = run_suite(Suite::exponents, 1, 5, threads3);
  VerificationReport b = run_suite(Suite::exponents, 1, 5);
  CHECK(a.passed() == b.passed());
  CHECK(a.per_rank.size() == b.per_rank.size());
  for (std::size_t k = 0; k < a.per_rank.size(); ++k) {
    CHECK(a.per_rank[k].checks == b.per_rank[k].checks);
    CHECK(a.per_rank[k].note == b.per_rank[k].note);
  }
}

TEST_CASE("default range overload") {
  VerificationReport report = run_suite(Suite::positivity_equivalence);
  CHECK(report.rank_lo == 1);
  CHECK(report.rank_hi == 3);
  CHECK(report.passed());
}

TEST_CASE("pruning bench rows") {
  auto rows = bench_pruning(1, 5);
  REQUIRE(rows.size() == 5);
  const std::uint64_t fib[] = {1, 1, 2, 3, 5};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const int r = static_cast<int>(k) + 1;
    CHECK(rows[k].rank == r);
    CHECK(rows[k].full_terms == factorial(r + 1));
    CHECK(rows[k].pruned_terms == fib[k]);
    CHECK(rows[k].values_equal);
    CHECK(rows[k].full_millis >= 0);
    CHECK(rows[k].pruned_millis >= 0);
  }
}

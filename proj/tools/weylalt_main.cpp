// Command line front end: weight multiplicities, alternation sets, partition
// values, the verification suites, and the pruning benchmark, with table or
// JSON output.
//
// Exit codes: 0 success (and verification pass), 1 verification found
// counterexamples, 2 usage or validation problem, 3 resource ceiling hit
// (including a verification run cut short by its time budget).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "weylalt/altset.hpp"
#include "weylalt/bigint.hpp"
#include "weylalt/multiplicity.hpp"
#include "weylalt/partition.hpp"
#include "weylalt/qpoly.hpp"
#include "weylalt/rootsys.hpp"
#include "weylalt/verify.hpp"
#include "weylalt/weyl.hpp"

#ifndef WEYLALT_VERSION
#define WEYLALT_VERSION "0.0.0"
#endif

namespace {

using weylalt::AltSet;
using weylalt::AltSetOptions;
using weylalt::Backend;
using weylalt::Bigint;
using weylalt::EpsVector;
using weylalt::QPoly;
using weylalt::RankContext;
using weylalt::VerificationReport;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitSuccess = 0;
constexpr int kExitCounterexamples = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

// JSON carries no floats; integers that a double-based JSON consumer would
// mangle (|v| >= 2^53) are rendered as decimal strings instead.
ordered_json json_int(const Bigint& v) {
  static const Bigint lo = -(Bigint(1) << 53);
  static const Bigint hi = Bigint(1) << 53;
  if (v > lo && v < hi) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

ordered_json json_int(std::uint64_t v) {
  return json_int(Bigint(static_cast<unsigned long>(v)));
}

ordered_json weight_json(const EpsVector& v) {
  ordered_json out;
  out["num"] = v.numerators();
  out["den"] = v.denominator();
  return out;
}

ordered_json poly_json(const QPoly& p) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(json_int(c));
  ordered_json out;
  out["coeffs"] = std::move(coeffs);
  return out;
}

ordered_json envelope(const std::string& command, ordered_json rank,
                      ordered_json inputs, ordered_json result,
                      ordered_json terms, ordered_json backend) {
  ordered_json out;
  out["command"] = command;
  out["rank"] = std::move(rank);
  out["inputs"] = std::move(inputs);
  out["result"] = std::move(result);
  out["terms_evaluated"] = std::move(terms);
  out["backend"] = std::move(backend);
  out["version"] = WEYLALT_VERSION;
  return out;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// Weight specifications.
//
// A weight option takes one string:
//   highest-root | zero | fund:a1,...,ar | eps:x1,...,xn | a1,...,ar
// (a bare comma list is read as fundamental coefficients).  The command line
// also accepts the marker style "--lambda --fund 1,0,1"; a pre-pass below
// folds those markers into the single-string form before parsing.

std::vector<std::string> fold_weight_markers(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc) - 1);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);

  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const bool weight_flag = a == "--lambda" || a == "--mu" || a == "--target";
    if (weight_flag && i + 1 < args.size()) {
      const std::string& next = args[i + 1];
      if (next == "--highest-root" || next == "--zero") {
        out.push_back(a + "=" + next.substr(2));
        ++i;
        continue;
      }
      if ((next == "--fund" || next == "--eps") && i + 2 < args.size()) {
        out.push_back(a + "=" + next.substr(2) + ":" + args[i + 2]);
        i += 2;
        continue;
      }
    }
    out.push_back(a);
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& flag,
                                         const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      values.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size() || item.empty())
      throw weylalt::InvalidInputError(flag + ": '" + item +
                                       "' is not an integer");
  }
  if (values.empty())
    throw weylalt::InvalidInputError(flag + ": empty coordinate list");
  return values;
}

EpsVector parse_weight(const RankContext& ctx, const std::string& flag,
                       const std::string& spec) {
  if (spec == "highest-root") return ctx.highest_root();
  if (spec == "zero") return EpsVector::zero(static_cast<std::size_t>(ctx.n()));
  std::string body = spec;
  bool eps = false;
  if (spec.rfind("fund:", 0) == 0) {
    body = spec.substr(5);
  } else if (spec.rfind("eps:", 0) == 0) {
    body = spec.substr(4);
    eps = true;
  }
  const auto values = parse_int_list(flag, body);
  if (eps) {
    if (values.size() != static_cast<std::size_t>(ctx.n()))
      throw weylalt::InvalidInputError(
          flag + ": expected " + std::to_string(ctx.n()) +
          " epsilon coordinates for rank " + std::to_string(ctx.rank()) +
          ", got " + std::to_string(values.size()));
    return EpsVector(values);
  }
  if (values.size() != static_cast<std::size_t>(ctx.rank()))
    throw weylalt::InvalidInputError(
        flag + ": expected " + std::to_string(ctx.rank()) +
        " fundamental coefficients for rank " + std::to_string(ctx.rank()) +
        ", got " + std::to_string(values.size()));
  return from_fundamental_coeffs(ctx, values);
}

Backend parse_backend(const std::string& name) {
  if (name == "full") return Backend::full_sum;
  if (name == "pruned") return Backend::positivity_pruned;
  if (name == "closed") return Backend::closed_form;
  throw weylalt::InvalidInputError("--backend: unknown backend '" + name +
                                   "' (choose full, pruned, or closed)");
}

// ---------------------------------------------------------------------------
// Shared option bundles.

// Default worker count when --threads is absent: the WEYLALT_THREADS
// environment variable if it holds a non-negative integer, else 0 (auto).
unsigned env_default_threads() {
  const char* raw = std::getenv("WEYLALT_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  if (end == nullptr || *end != '\0') return 0;
  return static_cast<unsigned>(value);
}

struct WeightArgs {
  int rank = 0;
  std::string lambda;
  std::string mu;
  std::string backend = "pruned";
  std::string format = "table";
  unsigned threads = 0;
  int max_n = 10;
};

void add_common_flags(CLI::App* cmd, WeightArgs& args, bool with_backend) {
  cmd->add_option("--rank", args.rank, "Rank r of the root system (n = r + 1)")
      ->required();
  cmd->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  if (with_backend) {
    cmd->add_option("--backend", args.backend,
                    "full (all n! terms), pruned (positivity filter), or "
                    "closed (no enumeration; highest-root cases only)")
        ->check(CLI::IsMember({"full", "pruned", "closed"}))
        ->capture_default_str();
    args.threads = env_default_threads();
    cmd->add_option("--threads", args.threads,
                    "Worker threads for the Weyl sum (0 = automatic; default "
                    "from WEYLALT_THREADS)")
        ->capture_default_str();
    cmd->add_option("--max-n", args.max_n,
                    "Ceiling on n for the n!-term enumeration backends")
        ->capture_default_str();
  }
}

const char* weight_spec_help =
    "highest-root | zero | fund:a1,...,ar | eps:x1,...,xn | a1,...,ar";

// ---------------------------------------------------------------------------
// mult / qmult

int run_mult(const WeightArgs& args, bool q_analog) {
  RankContext ctx(args.rank);
  const EpsVector lambda = parse_weight(ctx, "--lambda", args.lambda);
  const EpsVector mu = parse_weight(ctx, "--mu", args.mu);
  const Backend backend = parse_backend(args.backend);
  weylalt::MultOptions options;
  options.threads = args.threads;
  options.max_n = args.max_n;

  ordered_json inputs;
  inputs["lambda"] = weight_json(lambda);
  inputs["mu"] = weight_json(mu);

  if (q_analog) {
    const auto res = weylalt::mult_q(ctx, lambda, mu, backend, options);
    if (args.format == "json") {
      emit(envelope("qmult", args.rank, std::move(inputs),
                    poly_json(res.value), json_int(res.terms_evaluated),
                    weylalt::backend_name(res.backend)));
    } else {
      std::cout << "rank:            " << args.rank << "\n"
                << "lambda:          " << lambda.to_string() << "\n"
                << "mu:              " << mu.to_string() << "\n"
                << "q-multiplicity:  " << res.value.to_string() << "\n"
                << "terms evaluated: " << res.terms_evaluated << "\n"
                << "backend:         " << weylalt::backend_name(res.backend)
                << "\n";
    }
  } else {
    const auto res = weylalt::mult(ctx, lambda, mu, backend, options);
    if (args.format == "json") {
      emit(envelope("mult", args.rank, std::move(inputs), json_int(res.value),
                    json_int(res.terms_evaluated),
                    weylalt::backend_name(res.backend)));
    } else {
      std::cout << "rank:            " << args.rank << "\n"
                << "lambda:          " << lambda.to_string() << "\n"
                << "mu:              " << mu.to_string() << "\n"
                << "multiplicity:    " << weylalt::to_decimal(res.value) << "\n"
                << "terms evaluated: " << res.terms_evaluated << "\n"
                << "backend:         " << weylalt::backend_name(res.backend)
                << "\n";
    }
  }
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// altset

int run_altset(const WeightArgs& args) {
  RankContext ctx(args.rank);
  const EpsVector lambda = parse_weight(ctx, "--lambda", args.lambda);
  const EpsVector mu = parse_weight(ctx, "--mu", args.mu);
  const Backend backend = parse_backend(args.backend);

  AltSet set(args.rank, lambda, mu, {});
  std::uint64_t terms = 0;
  if (backend == Backend::closed_form) {
    if (lambda != ctx.highest_root())
      throw weylalt::InvalidInputError(
          "altset: --backend closed covers lambda = highest root only");
    set = mu.is_zero() ? weylalt::zero_weight_alternation_set(ctx)
                       : weylalt::nonzero_weight_alternation_set(ctx, mu);
  } else {
    AltSetOptions options;
    options.threads = args.threads;
    options.max_n = args.max_n;
    options.audit_with_partition_count = backend == Backend::full_sum;
    set = weylalt::alternation_set(ctx, lambda, mu, options);
    terms = backend == Backend::full_sum ? weylalt::factorial(ctx.n())
                                         : set.cardinality();
  }

  if (args.format == "json") {
    ordered_json inputs;
    inputs["lambda"] = weight_json(lambda);
    inputs["mu"] = weight_json(mu);
    ordered_json elements = ordered_json::array();
    for (const auto& el : set.elements()) {
      ordered_json e;
      e["sigma"] = el.sigma.one_line();
      e["length"] = el.length;
      e["sign"] = el.sign;
      e["translate"] = weight_json(el.translate);
      elements.push_back(std::move(e));
    }
    ordered_json levels = ordered_json::array();
    for (const auto& [len, count] : set.level_counts()) {
      ordered_json level;
      level["length"] = len;
      level["count"] = json_int(count);
      levels.push_back(std::move(level));
    }
    ordered_json result;
    result["cardinality"] = json_int(set.cardinality());
    result["max_length"] = set.max_observed_length();
    result["level_counts"] = std::move(levels);
    result["elements"] = std::move(elements);
    emit(envelope("altset", args.rank, std::move(inputs), std::move(result),
                  json_int(terms), weylalt::backend_name(backend)));
  } else {
    std::cout << "rank:        " << args.rank << "\n"
              << "lambda:      " << lambda.to_string() << "\n"
              << "mu:          " << mu.to_string() << "\n"
              << "cardinality: " << set.cardinality() << "\n"
              << "max length:  " << set.max_observed_length() << "\n";
    std::cout << "levels:     ";
    for (const auto& [len, count] : set.level_counts())
      std::cout << " " << len << ":" << count;
    std::cout << "\n";
    for (const auto& el : set.elements())
      std::cout << "  " << el.sigma.to_string() << "  length " << el.length
                << "  sign " << (el.sign > 0 ? "+1" : "-1") << "  translate "
                << el.translate.to_string() << "\n";
  }
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// partition

int run_partition(const WeightArgs& args, const std::string& target_spec) {
  RankContext ctx(args.rank);
  const EpsVector target = parse_weight(ctx, "--target", target_spec);
  const Bigint count = weylalt::kostant(ctx, target);
  const QPoly poly = weylalt::kostant_q(ctx, target);
  const bool positive = weylalt::is_positive(ctx, target);

  if (args.format == "json") {
    ordered_json inputs;
    inputs["target"] = weight_json(target);
    ordered_json result;
    result["count"] = json_int(count);
    result["q_analog"] = poly_json(poly);
    result["positive"] = positive;
    emit(envelope("partition", args.rank, std::move(inputs), std::move(result),
                  json_int(std::uint64_t{1}), nullptr));
  } else {
    std::cout << "rank:     " << args.rank << "\n"
              << "target:   " << target.to_string() << "\n"
              << "count:    " << weylalt::to_decimal(count) << "\n"
              << "q-analog: " << poly.to_string() << "\n"
              << "positive: " << (positive ? "yes" : "no") << "\n";
  }
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// verify

ordered_json report_json(const VerificationReport& report) {
  ordered_json result;
  result["status"] = report.status();
  result["complete"] = report.complete;
  ordered_json cx = ordered_json::array();
  for (const auto& c : report.counterexamples) {
    ordered_json e;
    e["rank"] = c.rank;
    e["witness"] = c.witness;
    e["expected"] = c.expected;
    e["actual"] = c.actual;
    cx.push_back(std::move(e));
  }
  result["counterexamples"] = std::move(cx);
  ordered_json ranks = ordered_json::array();
  for (const auto& s : report.per_rank) {
    ordered_json e;
    e["rank"] = s.rank;
    e["checks"] = json_int(s.checks);
    e["note"] = s.note;
    ranks.push_back(std::move(e));
  }
  result["per_rank"] = std::move(ranks);
  ordered_json timings = ordered_json::array();
  for (const auto& t : report.timings) {
    ordered_json e;
    e["rank"] = t.rank;
    e["millis"] = t.millis;
    timings.push_back(std::move(e));
  }
  result["timings_ms"] = std::move(timings);
  result["notes"] = report.notes;
  return result;
}

void print_report_table(const VerificationReport& report) {
  std::cout << "suite:    " << weylalt::suite_name(report.suite) << "\n"
            << "ranks:    " << report.rank_lo << ".." << report.rank_hi << "\n"
            << "status:   " << report.status()
            << (report.complete ? "" : " (incomplete)") << "\n";
  for (std::size_t k = 0; k < report.per_rank.size(); ++k) {
    const auto& s = report.per_rank[k];
    std::cout << "  r=" << s.rank << "  checks=" << s.checks;
    if (!s.note.empty()) std::cout << "  " << s.note;
    if (k < report.timings.size())
      std::cout << "  (" << report.timings[k].millis << " ms)";
    std::cout << "\n";
  }
  for (const auto& c : report.counterexamples)
    std::cout << "  counterexample r=" << c.rank << ": " << c.witness
              << " expected " << c.expected << " got " << c.actual << "\n";
  for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
}

struct VerifyArgs {
  std::string suite;
  int min_rank = 0;  // 0 = suite default
  int max_rank = 0;
  std::int64_t budget_ms = -1;
  unsigned threads = 0;
  int max_n = 10;
  std::string format = "table";
};

int run_verify(const VerifyArgs& args) {
  const weylalt::Suite suite = weylalt::suite_from_name(args.suite);
  auto range = weylalt::default_rank_range(suite);
  if (args.min_rank > 0) range.first = args.min_rank;
  if (args.max_rank > 0) range.second = args.max_rank;

  weylalt::SuiteOptions options;
  options.budget_ms = args.budget_ms;
  options.threads = args.threads;
  options.max_n = args.max_n;

  const VerificationReport report =
      weylalt::run_suite(suite, range.first, range.second, options);

  if (args.format == "json") {
    ordered_json rank;
    rank["lo"] = report.rank_lo;
    rank["hi"] = report.rank_hi;
    ordered_json inputs;
    inputs["suite"] = weylalt::suite_name(suite);
    inputs["budget_ms"] = args.budget_ms;
    inputs["threads"] = args.threads;
    inputs["max_n"] = args.max_n;
    std::uint64_t checks = 0;
    for (const auto& s : report.per_rank) checks += s.checks;
    emit(envelope("verify", std::move(rank), std::move(inputs),
                  report_json(report), json_int(checks), nullptr));
  } else {
    print_report_table(report);
  }
  if (!report.passed()) return kExitCounterexamples;
  if (!report.complete) return kExitResource;
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  int min_rank = 1;
  int max_rank = 8;
  unsigned threads = 0;
  int max_n = 10;
  std::string format = "table";
};

int run_bench(const BenchArgs& args) {
  weylalt::SuiteOptions options;
  options.threads = args.threads;
  options.max_n = args.max_n;
  const auto rows = weylalt::bench_pruning(args.min_rank, args.max_rank, options);

  bool all_equal = true;
  for (const auto& row : rows) all_equal = all_equal && row.values_equal;

  if (args.format == "json") {
    ordered_json rank;
    rank["lo"] = args.min_rank;
    rank["hi"] = args.max_rank;
    ordered_json inputs;
    inputs["threads"] = args.threads;
    inputs["max_n"] = args.max_n;
    ordered_json result = ordered_json::array();
    std::uint64_t terms = 0;
    for (const auto& row : rows) {
      ordered_json e;
      e["rank"] = row.rank;
      e["full_terms"] = json_int(row.full_terms);
      e["pruned_terms"] = json_int(row.pruned_terms);
      e["full_millis"] = row.full_millis;
      e["pruned_millis"] = row.pruned_millis;
      e["values_equal"] = row.values_equal;
      result.push_back(std::move(e));
      terms += row.full_terms + row.pruned_terms;
    }
    emit(envelope("bench", std::move(rank), std::move(inputs),
                  std::move(result), json_int(terms), nullptr));
  } else {
    std::cout << "rank  full_terms  pruned_terms  full_ms  pruned_ms  equal\n";
    for (const auto& row : rows) {
      std::ostringstream line;
      line << row.rank << "  " << row.full_terms << "  " << row.pruned_terms
           << "  " << row.full_millis << "  " << row.pruned_millis << "  "
           << (row.values_equal ? "yes" : "NO");
      std::cout << line.str() << "\n";
    }
  }
  return all_equal ? kExitSuccess : kExitCounterexamples;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the type A root system: Kostant "
               "partition counts and their q-analogs, weight multiplicities, "
               "Weyl alternation sets, and closed-form verification suites."};
  app.set_version_flag("--version", std::string("weylalt ") + WEYLALT_VERSION);
  app.require_subcommand(1);

  WeightArgs mult_args;
  CLI::App* mult_cmd =
      app.add_subcommand("mult", "Weight multiplicity m(lambda, mu)");
  add_common_flags(mult_cmd, mult_args, true);
  mult_cmd->add_option("--lambda", mult_args.lambda, weight_spec_help)
      ->required();
  mult_cmd->add_option("--mu", mult_args.mu, weight_spec_help)->required();

  WeightArgs qmult_args;
  CLI::App* qmult_cmd = app.add_subcommand(
      "qmult", "q-graded weight multiplicity m_q(lambda, mu)");
  add_common_flags(qmult_cmd, qmult_args, true);
  qmult_cmd->add_option("--lambda", qmult_args.lambda, weight_spec_help)
      ->required();
  qmult_cmd->add_option("--mu", qmult_args.mu, weight_spec_help)->required();

  WeightArgs altset_args;
  CLI::App* altset_cmd = app.add_subcommand(
      "altset", "Weyl alternation set A(lambda, mu)");
  add_common_flags(altset_cmd, altset_args, true);
  altset_cmd->add_option("--lambda", altset_args.lambda, weight_spec_help)
      ->required();
  altset_cmd->add_option("--mu", altset_args.mu, weight_spec_help)->required();

  WeightArgs partition_args;
  std::string target_spec;
  CLI::App* partition_cmd = app.add_subcommand(
      "partition", "Kostant partition count and q-analog of a target vector");
  add_common_flags(partition_cmd, partition_args, false);
  partition_cmd->add_option("--target", target_spec, weight_spec_help)
      ->required();

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Audit a closed-form claim against brute force");
  {
    std::vector<std::string> names;
    for (auto s : weylalt::all_suites()) names.emplace_back(weylalt::suite_name(s));
    verify_cmd->add_option("--suite", verify_args.suite, "Suite to run")
        ->required()
        ->check(CLI::IsMember(names));
  }
  verify_cmd->add_option("--min-rank", verify_args.min_rank,
                         "First rank (0 = suite default)");
  verify_cmd->add_option("--max-rank", verify_args.max_rank,
                         "Last rank (0 = suite default)");
  verify_cmd->add_option("--budget-ms", verify_args.budget_ms,
                         "Wall-clock budget; negative = unlimited")
      ->capture_default_str();
  verify_args.threads = env_default_threads();
  verify_cmd->add_option("--threads", verify_args.threads,
                         "Worker threads (0 = automatic; default from "
                         "WEYLALT_THREADS)")
      ->capture_default_str();
  verify_cmd->add_option("--max-n", verify_args.max_n,
                         "Ceiling on n for enumeration")
      ->capture_default_str();
  verify_cmd->add_option("--format", verify_args.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  BenchArgs bench_args;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Contrast full and positivity-pruned Weyl sums");
  bench_cmd->add_option("--min-rank", bench_args.min_rank, "First rank")
      ->capture_default_str();
  bench_cmd->add_option("--max-rank", bench_args.max_rank, "Last rank")
      ->capture_default_str();
  bench_args.threads = env_default_threads();
  bench_cmd->add_option("--threads", bench_args.threads,
                        "Worker threads (0 = automatic; default from "
                        "WEYLALT_THREADS)")
      ->capture_default_str();
  bench_cmd->add_option("--max-n", bench_args.max_n,
                        "Ceiling on n for enumeration")
      ->capture_default_str();
  bench_cmd->add_option("--format", bench_args.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  std::vector<std::string> folded = fold_weight_markers(argc, argv);
  std::reverse(folded.begin(), folded.end());
  try {
    app.parse(std::move(folded));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (mult_cmd->parsed()) return run_mult(mult_args, false);
    if (qmult_cmd->parsed()) return run_mult(qmult_args, true);
    if (altset_cmd->parsed()) return run_altset(altset_args);
    if (partition_cmd->parsed())
      return run_partition(partition_args, target_spec);
    if (verify_cmd->parsed()) return run_verify(verify_args);
    if (bench_cmd->parsed()) return run_bench(bench_args);
  } catch (const weylalt::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const weylalt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

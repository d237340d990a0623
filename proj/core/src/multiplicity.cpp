#include "weylalt/multiplicity.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "weyl_scan.hpp"
#include "weylalt/errors.hpp"
#include "weylalt/threads.hpp"

namespace weylalt {

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::full_sum:
      return "full_sum";
    case Backend::positivity_pruned:
      return "positivity_pruned";
    case Backend::closed_form:
      return "closed_form";
  }
  return "unknown";
}

namespace {

void validate_pair(const RankContext& ctx, const EpsVector& lambda,
                   const EpsVector& mu) {
  require_size(ctx, lambda, "mult(lambda)");
  require_size(ctx, mu, "mult(mu)");
  require_sum_zero(lambda, "mult(lambda)");
  require_sum_zero(mu, "mult(mu)");
  require_integral_weight(lambda, "mult(lambda)");
  require_integral_weight(mu, "mult(mu)");
  require_dominant(lambda, "mult(lambda)");
}

void check_ceiling(const RankContext& ctx, const MultOptions& options) {
  if (ctx.n() > options.max_n)
    throw ResourceLimitError(
        "mult: n = " + std::to_string(ctx.n()) +
        " exceeds the enumeration ceiling max_n = " +
        std::to_string(options.max_n) +
        " (the Weyl sum has n! terms); raise MultOptions::max_n or use the "
        "closed_form backend");
}

// Term evaluators: turn a translate vector into one term of the sum.
struct CountEval {
  using Acc = Bigint;
  const RankContext& ctx;
  PartitionCache& cache;
  Bigint operator()(const std::vector<std::int64_t>& t) const {
    return kostant(ctx, EpsVector(t), cache);
  }
};

struct PolyEval {
  using Acc = QPoly;
  const RankContext& ctx;
  PartitionCache& cache;
  QPoly operator()(const std::vector<std::int64_t>& t) const {
    return kostant_q(ctx, EpsVector(t), cache);
  }
};

// One worker's share of the alternating sum.  Accumulator is Bigint for the
// plain multiplicity and QPoly for the q-analog; the Eval functor turns a
// translate vector into the term value.
template <class Acc, class Eval>
void sum_range(const RankContext& ctx, const detail::ScanInputs& in,
               std::uint64_t first, std::uint64_t last, bool pruned,
               const Eval& eval, Acc& acc, std::uint64_t& terms) {
  const int nn = ctx.n();
  if (first >= last) return;
  std::vector<int> img = nth_permutation(nn, first).one_line();
  std::vector<std::int64_t> t(nn);
  for (std::uint64_t idx = first; idx < last; ++idx) {
    detail::build_translate(in, img, t);
    if (!pruned || detail::translate_is_positive(t)) {
      ++terms;
      Acc term = eval(t);
      if (detail::inversions(img) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    if (!std::next_permutation(img.begin(), img.end())) break;
  }
}

template <class Eval>
MultiplicityResult<typename Eval::Acc> weyl_sum(const RankContext& ctx,
                                                const EpsVector& lambda,
                                                const EpsVector& mu,
                                                Backend backend,
                                                const MultOptions& options) {
  using Acc = typename Eval::Acc;
  check_ceiling(ctx, options);

  MultiplicityResult<Acc> out;
  out.backend = backend;

  // When lambda - mu is outside the root lattice no translate is an
  // integer vector, so every term vanishes and there is nothing to
  // evaluate.
  if (!(lambda - mu).is_integral()) return out;

  const detail::ScanInputs in = detail::prepare_scan(ctx, lambda, mu);
  const std::uint64_t total = factorial(ctx.n());
  const bool pruned = backend == Backend::positivity_pruned;
  const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(
      resolve_thread_count(options.threads), total));

  if (threads == 1) {
    PartitionCache local;
    Eval eval{ctx, options.cache ? *options.cache : local};
    sum_range(ctx, in, 0, total, pruned, eval, out.value, out.terms_evaluated);
    return out;
  }

  std::vector<Acc> acc(threads);
  std::vector<std::uint64_t> terms(threads, 0);
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mu;
  for (unsigned w = 0; w < threads; ++w) {
    const auto [lo, hi] = detail::chunk_bounds(total, threads, w);
    pool.emplace_back([&, w, lo, hi] {
      try {
        PartitionCache local;
        Eval eval{ctx, options.cache ? *options.cache : local};
        sum_range(ctx, in, lo, hi, pruned, eval, acc[w], terms[w]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  for (unsigned w = 0; w < threads; ++w) {
    out.value += acc[w];
    out.terms_evaluated += terms[w];
  }
  return out;
}

}  // namespace

MultiplicityResult<Bigint> mult(const RankContext& ctx, const EpsVector& lambda,
                                const EpsVector& mu, Backend backend,
                                const MultOptions& options) {
  validate_pair(ctx, lambda, mu);

  if (backend == Backend::closed_form) {
    if (lambda != ctx.highest_root())
      throw InvalidInputError(
          "mult: the closed_form backend covers lambda = highest root only");
    MultiplicityResult<Bigint> out;
    out.backend = backend;
    const EpsVector dc = dominant_conjugate(ctx, mu).weight;
    if (dc.is_zero())
      out.value = ctx.rank();
    else if (dc == ctx.highest_root())
      out.value = 1;
    else
      out.value = 0;
    return out;
  }

  return weyl_sum<CountEval>(ctx, lambda, mu, backend, options);
}

MultiplicityResult<QPoly> mult_q(const RankContext& ctx, const EpsVector& lambda,
                                 const EpsVector& mu, Backend backend,
                                 const MultOptions& options) {
  validate_pair(ctx, lambda, mu);

  if (backend == Backend::closed_form) {
    if (lambda != ctx.highest_root())
      throw InvalidInputError(
          "mult_q: the closed_form backend covers lambda = highest root only");
    if (!mu.is_weakly_decreasing())
      throw InvalidInputError(
          "mult_q: the closed_form backend requires a dominant mu (the "
          "q-analog is not invariant under permuting mu; use full_sum or "
          "positivity_pruned)");
    MultiplicityResult<QPoly> out;
    out.backend = backend;
    if (mu.is_zero())
      out.value = QPoly::geometric(1, static_cast<unsigned>(ctx.rank()));
    else if (mu == ctx.highest_root())
      out.value = QPoly(1L);
    return out;
  }

  return weyl_sum<PolyEval>(ctx, lambda, mu, backend, options);
}

DominantConjugate dominant_conjugate(const RankContext& ctx, const EpsVector& mu) {
  require_size(ctx, mu, "dominant_conjugate");
  const auto& num = mu.numerators();
  std::vector<int> order(mu.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return num[a] > num[b]; });

  std::vector<std::int64_t> sorted(mu.size());
  std::vector<int> img(mu.size());
  for (std::size_t rank_pos = 0; rank_pos < order.size(); ++rank_pos) {
    sorted[rank_pos] = num[order[rank_pos]];
    img[order[rank_pos]] = static_cast<int>(rank_pos) + 1;
  }
  return DominantConjugate{EpsVector(std::move(sorted), mu.denominator()),
                           Permutation(std::move(img))};
}

long long adjoint_multiplicity(const RankContext& ctx, const EpsVector& mu) {
  require_size(ctx, mu, "adjoint_multiplicity");
  require_sum_zero(mu, "adjoint_multiplicity");
  require_integral_weight(mu, "adjoint_multiplicity");
  const EpsVector dc = dominant_conjugate(ctx, mu).weight;
  if (dc.is_zero()) return ctx.rank();
  if (dc == ctx.highest_root()) return 1;
  return 0;
}

}  // namespace weylalt

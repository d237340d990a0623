#include "weylalt/altset.hpp"

#include <algorithm>
#include <thread>

#include "weyl_scan.hpp"
#include "weylalt/errors.hpp"
#include "weylalt/threads.hpp"

namespace weylalt {

AltSet::AltSet(int rank, EpsVector lambda, EpsVector mu,
               std::vector<AltSetElement> elements)
    : rank_(rank),
      lambda_(std::move(lambda)),
      mu_(std::move(mu)),
      elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(),
            [](const AltSetElement& a, const AltSetElement& b) {
              return a.sigma < b.sigma;
            });
}

bool AltSet::contains(const Permutation& sigma) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), sigma,
                             [](const AltSetElement& e, const Permutation& p) {
                               return e.sigma < p;
                             });
  return it != elements_.end() && it->sigma == sigma;
}

std::map<int, std::uint64_t> AltSet::level_counts() const {
  std::map<int, std::uint64_t> counts;
  for (const auto& e : elements_) ++counts[e.length];
  return counts;
}

int AltSet::max_observed_length() const {
  int best = -1;
  for (const auto& e : elements_) best = std::max(best, e.length);
  return best;
}

bool AltSet::operator==(const AltSet& rhs) const {
  if (rank_ != rhs.rank_ || lambda_ != rhs.lambda_ || mu_ != rhs.mu_ ||
      elements_.size() != rhs.elements_.size())
    return false;
  for (std::size_t k = 0; k < elements_.size(); ++k)
    if (elements_[k].sigma != rhs.elements_[k].sigma) return false;
  return true;
}

namespace {

// Scans the lexicographic positions [first, last) of S_n and collects the
// permutations whose translate passes the positivity test.
void scan_range(const RankContext& ctx, const detail::ScanInputs& in,
                std::uint64_t first, std::uint64_t last, bool audit,
                PartitionCache* audit_cache, std::vector<AltSetElement>& out) {
  const int nn = ctx.n();
  if (first >= last) return;
  std::vector<int> img = nth_permutation(nn, first).one_line();
  std::vector<std::int64_t> t(nn);
  for (std::uint64_t idx = first; idx < last; ++idx) {
    detail::build_translate(in, img, t);
    const bool positive = detail::translate_is_positive(t);

    if (audit) {
      const Bigint full = kostant(ctx, EpsVector(t), *audit_cache);
      if ((full > 0) != positive)
        throw Error("alternation_set: positivity test disagrees with the "
                    "partition count for sigma = " +
                    Permutation(img).to_string());
    }

    if (positive) {
      const int len = detail::inversions(img);
      out.push_back(AltSetElement{Permutation(img), len,
                                  len % 2 == 0 ? 1 : -1, EpsVector(t)});
    }
    if (!std::next_permutation(img.begin(), img.end())) break;
  }
}

AltSet filtered_set(const RankContext& ctx, const EpsVector& lambda,
                    const EpsVector& mu, const AltSetOptions& options) {
  require_size(ctx, lambda, "alternation_set(lambda)");
  require_size(ctx, mu, "alternation_set(mu)");
  require_sum_zero(lambda, "alternation_set(lambda)");
  require_sum_zero(mu, "alternation_set(mu)");
  require_integral_weight(lambda, "alternation_set(lambda)");
  require_integral_weight(mu, "alternation_set(mu)");

  if (ctx.n() > options.max_n)
    throw ResourceLimitError(
        "alternation_set: n = " + std::to_string(ctx.n()) +
        " exceeds the enumeration ceiling max_n = " +
        std::to_string(options.max_n) +
        " (the scan visits n! permutations); raise AltSetOptions::max_n to "
        "proceed");

  // Translates are integer vectors only when lambda - mu is in the root
  // lattice; otherwise no permutation can contribute.
  if (!(lambda - mu).is_integral())
    return AltSet(ctx.rank(), lambda, mu, {});

  const detail::ScanInputs in = detail::prepare_scan(ctx, lambda, mu);
  const std::uint64_t total = factorial(ctx.n());
  const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(
      resolve_thread_count(options.threads), total));

  PartitionCache audit_cache;
  std::vector<std::vector<AltSetElement>> partial(threads);
  if (threads == 1) {
    scan_range(ctx, in, 0, total, options.audit_with_partition_count,
               &audit_cache, partial[0]);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mu;
    for (unsigned w = 0; w < threads; ++w) {
      const auto [lo, hi] = detail::chunk_bounds(total, threads, w);
      pool.emplace_back([&, w, lo, hi] {
        try {
          scan_range(ctx, in, lo, hi, options.audit_with_partition_count,
                     &audit_cache, partial[w]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<AltSetElement> elements;
  for (auto& chunk : partial)
    for (auto& e : chunk) elements.push_back(std::move(e));
  return AltSet(ctx.rank(), lambda, mu, std::move(elements));
}

}  // namespace

AltSet alternation_set(const RankContext& ctx, const EpsVector& lambda,
                       const EpsVector& mu, const AltSetOptions& options) {
  require_dominant(lambda, "alternation_set(lambda)");
  require_dominant(mu, "alternation_set(mu)");
  return filtered_set(ctx, lambda, mu, options);
}

AltSet alternation_set_unchecked(const RankContext& ctx, const EpsVector& lambda,
                                 const EpsVector& mu,
                                 const AltSetOptions& options) {
  return filtered_set(ctx, lambda, mu, options);
}

AltSet zero_weight_alternation_set(const RankContext& ctx) {
  const int r = ctx.rank();
  const int bits = std::max(0, r - 2);  // candidate indices 2..r-1
  if (bits > 24)
    throw ResourceLimitError(
        "zero_weight_alternation_set: rank " + std::to_string(r) +
        " exceeds the construction ceiling rank <= 26 (the sweep visits "
        "2^(rank-2) index subsets)");

  const EpsVector lp = ctx.highest_root() + ctx.rho();
  std::vector<AltSetElement> elements;
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    if (mask & (mask >> 1)) continue;  // adjacent indices do not commute
    std::vector<int> idx;
    for (int b = 0; b < bits; ++b)
      if (mask & (1u << b)) idx.push_back(b + 2);
    Permutation sigma = product_of_simple_reflections(ctx.n(), idx);
    const int len = sigma.length();
    elements.push_back(AltSetElement{sigma, len, len % 2 == 0 ? 1 : -1,
                                     act(sigma, lp) - ctx.rho()});
  }
  return AltSet(ctx.rank(), ctx.highest_root(), EpsVector::zero(ctx.n()),
                std::move(elements));
}

AltSet nonzero_weight_alternation_set(const RankContext& ctx,
                                      const EpsVector& mu) {
  require_size(ctx, mu, "nonzero_weight_alternation_set");
  require_sum_zero(mu, "nonzero_weight_alternation_set");
  require_dominant(mu, "nonzero_weight_alternation_set");
  if (mu.is_zero())
    throw InvalidInputError(
        "nonzero_weight_alternation_set: mu = 0 has its own construction, "
        "see zero_weight_alternation_set");

  std::vector<AltSetElement> elements;
  if (mu == ctx.highest_root()) {
    elements.push_back(AltSetElement{Permutation::identity(ctx.n()), 0, 1,
                                     EpsVector::zero(ctx.n())});
  }
  return AltSet(ctx.rank(), ctx.highest_root(), mu, std::move(elements));
}

int max_alternation_length(const RankContext& ctx) {
  return (ctx.rank() - 1) / 2;
}

}  // namespace weylalt

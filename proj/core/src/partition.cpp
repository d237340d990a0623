#include "weylalt/partition.hpp"

#include <algorithm>

#include "weylalt/errors.hpp"

namespace weylalt {

std::size_t PartitionCache::entries() const {
  std::lock_guard<std::mutex> lock(mu_);
  return counts_.size() + polys_.size();
}

/*
 * Depth-first recursion over the positive roots in their fixed
 * lexicographic order.  At position k with root epsilon_i - epsilon_j, the
 * multiplicity c of that root is bounded by the i-th leading partial sum
 * of the residual: every remaining root adds a nonnegative amount to that
 * partial sum, and this root adds exactly c.  Subproblems repeat heavily
 * across branches (and across targets, for a shared cache), so results are
 * memoized by (k, residual).
 */
class PartitionEngine {
 public:
  PartitionEngine(const RankContext& ctx, PartitionCache& cache)
      : spans_(ctx.positive_root_spans()), cache_(cache) {}

  Bigint count(std::vector<std::int64_t> target) {
    res_ = std::move(target);
    return count_from(0);
  }

  QPoly count_q(std::vector<std::int64_t> target) {
    res_ = std::move(target);
    return count_q_from(0);
  }

 private:
  bool residual_is_zero() const {
    return std::all_of(res_.begin(), res_.end(),
                       [](std::int64_t x) { return x == 0; });
  }

  std::int64_t leading_sum(int i) const {
    std::int64_t s = 0;
    for (int t = 0; t < i; ++t) s += res_[t];
    return s;
  }

  std::vector<std::int64_t> make_key(std::size_t k) const {
    std::vector<std::int64_t> key;
    key.reserve(res_.size() + 1);
    key.push_back(static_cast<std::int64_t>(k));
    key.insert(key.end(), res_.begin(), res_.end());
    return key;
  }

  Bigint count_from(std::size_t k) {
    if (k == spans_.size()) return residual_is_zero() ? 1 : 0;
    const auto [i, j] = spans_[k];
    const std::int64_t bound = leading_sum(i);
    if (bound < 0) return 0;

    const std::vector<std::int64_t> key = make_key(k);
    {
      std::lock_guard<std::mutex> lock(cache_.mu_);
      auto it = cache_.counts_.find(key);
      if (it != cache_.counts_.end()) return it->second;
    }

    Bigint total = 0;
    for (std::int64_t c = 0; c <= bound; ++c) {
      total += count_from(k + 1);
      --res_[i - 1];
      ++res_[j - 1];
    }
    res_[i - 1] += bound + 1;
    res_[j - 1] -= bound + 1;

    std::lock_guard<std::mutex> lock(cache_.mu_);
    return cache_.counts_.emplace(key, std::move(total)).first->second;
  }

  QPoly count_q_from(std::size_t k) {
    if (k == spans_.size()) return residual_is_zero() ? QPoly(1L) : QPoly();
    const auto [i, j] = spans_[k];
    const std::int64_t bound = leading_sum(i);
    if (bound < 0) return QPoly();

    const std::vector<std::int64_t> key = make_key(k);
    {
      std::lock_guard<std::mutex> lock(cache_.mu_);
      auto it = cache_.polys_.find(key);
      if (it != cache_.polys_.end()) return it->second;
    }

    QPoly total;
    for (std::int64_t c = 0; c <= bound; ++c) {
      total += count_q_from(k + 1).shifted(static_cast<unsigned>(c));
      --res_[i - 1];
      ++res_[j - 1];
    }
    res_[i - 1] += bound + 1;
    res_[j - 1] -= bound + 1;

    std::lock_guard<std::mutex> lock(cache_.mu_);
    return cache_.polys_.emplace(key, std::move(total)).first->second;
  }

  const std::vector<std::pair<int, int>>& spans_;
  PartitionCache& cache_;
  std::vector<std::int64_t> res_;
};

namespace {

std::vector<std::int64_t> checked_target(const RankContext& ctx,
                                         const EpsVector& target,
                                         const char* what) {
  require_size(ctx, target, what);
  if (!target.is_integral())
    throw InvalidInputError(std::string(what) +
                            ": target must have integer entries");
  return target.numerators();
}

}  // namespace

Bigint kostant(const RankContext& ctx, const EpsVector& target) {
  PartitionCache cache;
  return kostant(ctx, target, cache);
}

Bigint kostant(const RankContext& ctx, const EpsVector& target,
               PartitionCache& cache) {
  std::vector<std::int64_t> t = checked_target(ctx, target, "kostant");
  if (!target.coordinate_sum_is_zero()) return 0;
  return PartitionEngine(ctx, cache).count(std::move(t));
}

QPoly kostant_q(const RankContext& ctx, const EpsVector& target) {
  PartitionCache cache;
  return kostant_q(ctx, target, cache);
}

QPoly kostant_q(const RankContext& ctx, const EpsVector& target,
                PartitionCache& cache) {
  std::vector<std::int64_t> t = checked_target(ctx, target, "kostant_q");
  if (!target.coordinate_sum_is_zero()) return QPoly();
  return PartitionEngine(ctx, cache).count_q(std::move(t));
}

bool is_positive(const RankContext& ctx, const EpsVector& target) {
  std::vector<std::int64_t> t = checked_target(ctx, target, "is_positive");
  std::int64_t s = 0;
  for (int k = 0; k < ctx.rank(); ++k) {
    s += t[k];
    if (s < 0) return false;
  }
  return s + t[ctx.rank()] == 0;
}

}  // namespace weylalt

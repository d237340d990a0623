#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "weylalt/bigint.hpp"
#include "weylalt/qpoly.hpp"
#include "weylalt/rootsys.hpp"

namespace weylalt {

/**
 * Memo table for the partition-function recursion, keyed on the pair
 * (position in the fixed positive-root order, residual vector).
 *
 * Every evaluation gets a private cache by default.  Batch workloads that
 * evaluate many related targets (a Weyl sum, a scan over a weight grid) can
 * pass one shared cache to amortize overlapping subproblems.  The table is
 * guarded by a mutex and behaves as an idempotent memo: concurrent callers
 * may compute the same entry twice but always store identical values, so
 * results never depend on thread interleaving.
 */
class PartitionCache {
 public:
  PartitionCache() = default;
  PartitionCache(const PartitionCache&) = delete;
  PartitionCache& operator=(const PartitionCache&) = delete;

  /// Number of memoized subproblems (both plain and q-graded).
  std::size_t entries() const;

 private:
  friend class PartitionEngine;

  struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (auto x : v) {
        h ^= static_cast<std::uint64_t>(x);
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  mutable std::mutex mu_;
  std::unordered_map<std::vector<std::int64_t>, Bigint, KeyHash> counts_;
  std::unordered_map<std::vector<std::int64_t>, QPoly, KeyHash> polys_;
};

/// Kostant's partition function: the number of ways to write target as a
/// sum of positive roots with nonnegative integer multiplicities.
///
/// The target must be an integer vector with one coordinate per epsilon
/// (non-integer entries raise InvalidInputError, a size mismatch raises
/// InvalidInputError).  A nonzero coordinate sum is not an error; no sum of
/// roots can reach such a vector, so the count is 0.
Bigint kostant(const RankContext& ctx, const EpsVector& target);
Bigint kostant(const RankContext& ctx, const EpsVector& target,
               PartitionCache& cache);

/// The q-analog: coefficient j counts the expressions of target that use
/// exactly j positive roots (with multiplicity).  Its value at q = 1 is
/// kostant(target).
QPoly kostant_q(const RankContext& ctx, const EpsVector& target);
QPoly kostant_q(const RankContext& ctx, const EpsVector& target,
                PartitionCache& cache);

/// Positivity test: true exactly when all r leading partial sums of the
/// target are nonnegative and the total sum is zero, which happens exactly
/// when kostant(target) > 0.  Costs O(n) instead of a full count.
bool is_positive(const RankContext& ctx, const EpsVector& target);

}  // namespace weylalt

#pragma once

#include <cstdint>

#include "weylalt/partition.hpp"
#include "weylalt/qpoly.hpp"
#include "weylalt/rootsys.hpp"
#include "weylalt/weyl.hpp"

namespace weylalt {

/// How a multiplicity is computed.
///  - full_sum: the alternating sum over all n! Weyl group elements.
///  - positivity_pruned: the same sum, but the partition function is only
///    evaluated for permutations that pass the O(n) positivity test; all
///    skipped terms are zero, so the value is identical.
///  - closed_form: no Weyl sum at all; available for lambda = highest root,
///    where the answer is known outright.
enum class Backend { full_sum, positivity_pruned, closed_form };

const char* backend_name(Backend b);

template <class Value>
struct MultiplicityResult {
  Value value;
  /// Number of Weyl group terms whose partition function was evaluated:
  /// n! for full_sum, the number of surviving permutations for
  /// positivity_pruned, and 0 for closed_form.
  std::uint64_t terms_evaluated = 0;
  Backend backend = Backend::full_sum;
};

struct MultOptions {
  /// Enumeration ceiling for the summing backends (they walk all n!
  /// permutations).
  int max_n = 10;
  /// Worker threads for the Weyl sum; 0 picks a value automatically.
  /// Results are identical for every thread count.
  unsigned threads = 1;
  /// Optional shared memo table for the partition evaluations.  When null,
  /// each worker keeps a private one for the duration of the call.
  PartitionCache* cache = nullptr;
};

/// Weight multiplicity of mu in the irreducible representation with
/// highest weight lambda, as the alternating sum of partition counts over
/// the Weyl group.  lambda must be dominant; mu may be any integral weight
/// (the sum is invariant under permuting mu's coordinates).
MultiplicityResult<Bigint> mult(const RankContext& ctx, const EpsVector& lambda,
                                const EpsVector& mu, Backend backend,
                                const MultOptions& options = {});

/// The q-graded refinement: each partition count is replaced by its
/// q-analog polynomial.  Evaluating the result at q = 1 recovers mult().
/// The closed_form backend additionally requires mu dominant; unlike the
/// plain multiplicity, the q-analog is not invariant under permuting mu.
MultiplicityResult<QPoly> mult_q(const RankContext& ctx, const EpsVector& lambda,
                                 const EpsVector& mu, Backend backend,
                                 const MultOptions& options = {});

/// The weakly decreasing rearrangement of mu together with the (unique)
/// permutation produced by a stable descending sort: act(sigma, mu) is the
/// returned weight, and equal coordinates keep their original order.
struct DominantConjugate {
  EpsVector weight;
  Permutation sigma;
};
DominantConjugate dominant_conjugate(const RankContext& ctx, const EpsVector& mu);

/// Multiplicity of mu in the adjoint representation, by classification:
/// rank for mu = 0, one when mu is a root, zero otherwise.
long long adjoint_multiplicity(const RankContext& ctx, const EpsVector& mu);

}  // namespace weylalt

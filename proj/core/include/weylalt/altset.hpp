#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "weylalt/partition.hpp"
#include "weylalt/rootsys.hpp"
#include "weylalt/weyl.hpp"

namespace weylalt {

/// One member of an alternation set, together with the data every consumer
/// wants alongside it.  translate is sigma(lambda + rho) - (mu + rho), the
/// vector whose partition count is positive.
struct AltSetElement {
  Permutation sigma;
  int length;
  int sign;
  EpsVector translate;
};

/**
 * The alternation set A(lambda, mu): the permutations sigma for which
 * sigma(lambda + rho) - (mu + rho) has a positive partition count, i.e.
 * exactly the terms that survive in the multiplicity alternating sum.
 * Elements are stored in lexicographic one-line order regardless of how
 * they were generated.
 */
class AltSet {
 public:
  AltSet(int rank, EpsVector lambda, EpsVector mu,
         std::vector<AltSetElement> elements);

  int rank() const { return rank_; }
  const EpsVector& lambda() const { return lambda_; }
  const EpsVector& mu() const { return mu_; }

  const std::vector<AltSetElement>& elements() const { return elements_; }
  std::size_t cardinality() const { return elements_.size(); }
  bool contains(const Permutation& sigma) const;

  /// Number of elements of each Coxeter length.
  std::map<int, std::uint64_t> level_counts() const;

  /// Largest length among the elements; -1 when the set is empty.
  int max_observed_length() const;

  /// Same defining pair and the same elements.
  bool operator==(const AltSet& rhs) const;

 private:
  int rank_;
  EpsVector lambda_;
  EpsVector mu_;
  std::vector<AltSetElement> elements_;
};

struct AltSetOptions {
  /// Enumeration ceiling: brute force walks all n! permutations, so it
  /// refuses to run when n exceeds this bound.
  int max_n = 10;
  /// Worker threads for the n! scan; 0 picks a value automatically.
  /// Results are identical for every thread count.
  unsigned threads = 1;
  /// Also evaluate the full partition count for every permutation and
  /// check it against the O(n) positivity test.  Expensive; meant for
  /// tests at small rank.
  bool audit_with_partition_count = false;
};

/// Computes A(lambda, mu) by filtering all of S_n with the positivity test.
/// Both weights must be dominant; lambda and mu may be any integral weights
/// (when lambda - mu is not in the root lattice the set is empty, since no
/// translate is an integer vector).
/// Throws ResourceLimitError when n = rank + 1 exceeds options.max_n.
AltSet alternation_set(const RankContext& ctx, const EpsVector& lambda,
                       const EpsVector& mu, const AltSetOptions& options = {});

/// Same filter without the dominance checks.  For experiments only: when
/// mu is not dominant the filtered set no longer matches the multiplicity
/// formula term-for-term interpretation of A(lambda, mu).
AltSet alternation_set_unchecked(const RankContext& ctx, const EpsVector& lambda,
                                 const EpsVector& mu,
                                 const AltSetOptions& options = {});

/// A(highest_root, 0) assembled directly: products of pairwise commuting
/// simple reflections s_i with indices drawn from 2..r-1, no two adjacent.
/// Element count is the Fibonacci number F(r).
AltSet zero_weight_alternation_set(const RankContext& ctx);

/// A(highest_root, mu) for dominant mu != 0: the identity alone when mu is
/// the highest root, empty otherwise.
/// Throws InvalidInputError when mu = 0, InvalidWeightError when mu is not
/// dominant.
AltSet nonzero_weight_alternation_set(const RankContext& ctx, const EpsVector& mu);

/// Largest Coxeter length occurring in A(highest_root, 0): floor((r-1)/2).
int max_alternation_length(const RankContext& ctx);

}  // namespace weylalt

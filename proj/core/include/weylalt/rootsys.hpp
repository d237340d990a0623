#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weylalt/errors.hpp"

namespace weylalt {

/**
 * A weight of sl(n) written in epsilon-coordinates: an n-tuple summing to
 * zero, one entry per epsilon_k.  Entries are exact rationals with a
 * single common denominator so that fundamental weights (whose
 * epsilon-coordinates are integers shifted by a multiple of 1/n) are
 * representable without rounding.  Integral vectors have denominator 1.
 */
class EpsVector {
 public:
  EpsVector() = default;

  /// Integer coordinates.
  explicit EpsVector(std::vector<std::int64_t> coords);

  /// Exact rational coordinates numerators[k] / denominator.  The stored
  /// form is normalized: denominator > 0 and gcd(numerators, denominator) = 1.
  EpsVector(std::vector<std::int64_t> numerators, std::int64_t denominator);

  static EpsVector zero(std::size_t n);

  std::size_t size() const { return num_.size(); }
  bool is_integral() const { return den_ == 1; }
  std::int64_t denominator() const { return den_; }
  const std::vector<std::int64_t>& numerators() const { return num_; }

  /// Coordinate k (0-based) of an integral vector.
  /// Throws InvalidInputError when the vector is not integral.
  std::int64_t integer_at(std::size_t k) const;

  /// All coordinates of an integral vector.
  std::vector<std::int64_t> integer_coords() const;

  bool is_zero() const;
  bool coordinate_sum_is_zero() const;

  /// Weakly decreasing coordinates (the dominance condition in type A).
  bool is_weakly_decreasing() const;

  EpsVector operator+(const EpsVector& rhs) const;
  EpsVector operator-(const EpsVector& rhs) const;
  bool operator==(const EpsVector& rhs) const {
    return den_ == rhs.den_ && num_ == rhs.num_;
  }
  bool operator!=(const EpsVector& rhs) const { return !(*this == rhs); }

  /// "(1, 0, -1)"; rational entries render as reduced fractions.
  std::string to_string() const;

 private:
  void normalize();

  std::vector<std::int64_t> num_;
  std::int64_t den_ = 1;
};

/**
 * Immutable tables for the type A root system of a fixed rank r
 * (the Lie algebra sl(n) with n = r + 1).  Safe to share across threads.
 */
class RankContext {
 public:
  /// Throws InvalidRankError unless rank >= 1.
  explicit RankContext(int rank);

  int rank() const { return rank_; }
  int n() const { return rank_ + 1; }

  /// Positive roots epsilon_i - epsilon_j for 1 <= i < j <= n, ordered
  /// lexicographically by (i, j).  There are n(n-1)/2 of them.
  const std::vector<EpsVector>& positive_roots() const { return positive_roots_; }

  /// The (i, j) index pair of each positive root, 1-based, aligned with
  /// positive_roots().
  const std::vector<std::pair<int, int>>& positive_root_spans() const {
    return spans_;
  }

  /// Simple roots alpha_i = epsilon_i - epsilon_{i+1}, i = 1..r.
  const std::vector<EpsVector>& simple_roots() const { return simple_roots_; }

  /// The Weyl vector, stored as the integer representative
  /// (n-1, n-2, ..., 1, 0).  Its coordinate sum is deliberately nonzero;
  /// only differences of rho-shifted vectors ever reach the partition
  /// function, and those are unaffected by the choice of representative.
  const EpsVector& rho() const { return rho_; }

  /// The highest root (1, 0, ..., 0, -1) = alpha_1 + ... + alpha_r.
  const EpsVector& highest_root() const { return highest_root_; }

 private:
  int rank_;
  std::vector<EpsVector> positive_roots_;
  std::vector<std::pair<int, int>> spans_;
  std::vector<EpsVector> simple_roots_;
  EpsVector rho_;
  EpsVector highest_root_;
};

/// Pairing of the i-th fundamental weight (i = 1..r) with a coordinate-sum-
/// zero vector xi: the sum of the first i coordinates of xi.
/// Throws InvalidIndexError for i outside 1..r, InvalidWeightError when the
/// coordinate sum of xi is nonzero or the pairing value is not an integer.
std::int64_t fundamental_pairing(const RankContext& ctx, int i, const EpsVector& xi);

/// The weight sum_i coeffs[i] * (i-th fundamental weight) in epsilon-
/// coordinates.  coeffs must have exactly rank entries.  The result has
/// coordinate sum zero; it is integral exactly when sum_i i*coeffs[i] is
/// divisible by n, and carries denominator dividing n otherwise.
EpsVector from_fundamental_coeffs(const RankContext& ctx,
                                  const std::vector<std::int64_t>& coeffs);

/// Fundamental-weight coefficients of xi: the consecutive coordinate
/// differences xi_i - xi_{i+1} for i = 1..r.  Inverse of
/// from_fundamental_coeffs for every integral weight.
/// Throws InvalidWeightError when some difference is not an integer.
std::vector<std::int64_t> fundamental_coeffs(const RankContext& ctx,
                                             const EpsVector& xi);

/// True when v is a root, i.e. epsilon_i - epsilon_j for some i != j.
bool is_root(const RankContext& ctx, const EpsVector& v);

/// True when v lies in the weight lattice of sl(n): all consecutive
/// coordinate differences are integers.  (Assumes coordinate sum zero.)
bool is_integral_weight(const EpsVector& v);

/// Validation helpers shared by the higher-level modules.  Each throws the
/// documented error type with a message naming the offending condition.
void require_size(const RankContext& ctx, const EpsVector& v, const char* what);
void require_sum_zero(const EpsVector& v, const char* what);
void require_integral_weight(const EpsVector& v, const char* what);
void require_dominant(const EpsVector& v, const char* what);

}  // namespace weylalt

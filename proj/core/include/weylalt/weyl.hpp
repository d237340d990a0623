#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "weylalt/rootsys.hpp"

namespace weylalt {

/**
 * Element of the symmetric group S_n in one-line notation.  The Weyl group
 * of sl(n) acts on epsilon-coordinates by permuting positions; see act().
 */
class Permutation {
 public:
  /// Validates that one_line is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  /// The simple reflection s_i, i.e. the transposition (i, i+1), 1 <= i < n.
  static Permutation simple_reflection(int n, int i);

  int n() const { return static_cast<int>(img_.size()); }

  /// sigma(i) for 1 <= i <= n.
  int image(int i) const { return img_[i - 1]; }

  /// Images of 1..n in order.
  const std::vector<int>& one_line() const { return img_; }

  Permutation inverse() const;

  /// Function composition: (sigma * tau)(i) = sigma(tau(i)).
  Permutation operator*(const Permutation& rhs) const;

  /// Coxeter length: the number of inversions.
  int length() const;

  /// (-1)^length().
  int sign() const;

  bool is_identity() const;

  bool operator==(const Permutation& rhs) const { return img_ == rhs.img_; }
  bool operator!=(const Permutation& rhs) const { return !(*this == rhs); }

  /// Lexicographic order on one-line notation; this is the enumeration
  /// order used throughout.
  bool operator<(const Permutation& rhs) const { return img_ < rhs.img_; }

  /// "[2 1 3]"
  std::string to_string() const;

 private:
  std::vector<int> img_;
};

/// The natural action on epsilon-coordinates: coordinate i of the result is
/// coordinate sigma^{-1}(i) of xi.  Equivalently, sigma moves the value in
/// slot k to slot sigma(k), so sigma(epsilon_k) = epsilon_{sigma(k)}.
EpsVector act(const Permutation& sigma, const EpsVector& xi);

/// n! as an unsigned 64-bit value.  Throws InvalidInputError for n > 20,
/// where the product would overflow.
std::uint64_t factorial(int n);

/// The permutation at position `index` (0-based) in lexicographic order on
/// one-line notation, decoded through the factorial number system.
Permutation nth_permutation(int n, std::uint64_t index);

/// Calls fn once per element of S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

/// Calls fn for the lexicographic positions [first, last) only.  Together
/// with factorial() this partitions S_n into disjoint chunks for parallel
/// consumption; results never depend on the chunking.
void for_each_permutation_in_range(int n, std::uint64_t first, std::uint64_t last,
                                   const std::function<void(const Permutation&)>& fn);

/// Product s_{indices[0]} s_{indices[1]} ... applied left to right, i.e.
/// the element s_{i_1} s_{i_2} ... s_{i_k} of S_n.  Indices must lie in
/// 1..n-1; an empty list yields the identity.
Permutation product_of_simple_reflections(int n, std::span<const int> indices);

/// True when |sigma(i) - i| <= 1 for every i.
bool has_bounded_displacement(const Permutation& sigma);

/// True when sigma is a product of pairwise commuting simple reflections,
/// i.e. the plot of sigma splits into fixed points and disjoint adjacent
/// swaps (i, i+1).  Such elements are involutions.
bool is_commuting_reflection_product(const Permutation& sigma);

}  // namespace weylalt

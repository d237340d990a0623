#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylalt/bigint.hpp"

namespace weylalt {

/**
 * Polynomial in one variable q with exact integer coefficients.
 *
 * Coefficients are stored densely from degree 0 upward and kept in
 * canonical form: no trailing zero coefficients, and the zero polynomial
 * stores nothing.  Every polynomial this library produces is dense in
 * practice (truncated geometric series, binomial expansions), so there is
 * no sparse representation.
 */
class QPoly {
 public:
  /// The zero polynomial.
  QPoly() = default;

  /// The constant polynomial c.
  explicit QPoly(Bigint c);
  explicit QPoly(long c) : QPoly(Bigint(c)) {}

  /// Builds a polynomial from dense coefficients c[0] + c[1] q + ...
  /// Trailing zeros are trimmed.
  static QPoly from_coeffs(std::vector<Bigint> coeffs);

  /// coeff * q^degree.
  static QPoly monomial(unsigned degree, Bigint coeff = Bigint(1));

  /// (1 + q)^power, expanded.
  static QPoly one_plus_q_to(unsigned power);

  /// q^lo + q^(lo+1) + ... + q^hi.  Requires lo <= hi.
  static QPoly geometric(unsigned lo, unsigned hi);

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of the polynomial, -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of q^degree (zero beyond the stored range).
  Bigint coeff(unsigned degree) const;

  /// Dense coefficient list from degree 0; empty for the zero polynomial.
  const std::vector<Bigint>& coeffs() const { return coeffs_; }

  /// Sum of all coefficients, i.e. the value at q = 1.
  Bigint eval_at_one() const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly& operator*=(const Bigint& scalar);

  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  friend QPoly operator*(QPoly lhs, const QPoly& rhs) { return lhs *= rhs; }
  friend QPoly operator*(QPoly lhs, const Bigint& s) { return lhs *= s; }
  friend QPoly operator*(const Bigint& s, QPoly rhs) { return rhs *= s; }
  QPoly operator-() const;

  bool operator==(const QPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const QPoly& rhs) const { return !(*this == rhs); }

  /// Multiplies by q^k (shifts all exponents up by k).
  QPoly shifted(unsigned k) const;

  /// Human-readable form, e.g. "q + 2*q^2 + q^3"; "0" for zero.
  std::string to_string() const;

 private:
  void trim();

  std::vector<Bigint> coeffs_;
};

/// Fibonacci polynomial sum_k C(r-1-k, k) t^k.  Its value at t = 1 is the
/// Fibonacci number F(r).
QPoly fibonacci_polynomial(unsigned r);

}  // namespace weylalt

#include "weylalt/qpoly.hpp"

#include <sstream>
#include <utility>

#include "weylalt/errors.hpp"

namespace weylalt {

QPoly::QPoly(Bigint c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

QPoly QPoly::from_coeffs(std::vector<Bigint> coeffs) {
  QPoly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

QPoly QPoly::monomial(unsigned degree, Bigint coeff) {
  QPoly p;
  if (coeff != 0) {
    p.coeffs_.assign(degree + 1, Bigint(0));
    p.coeffs_[degree] = std::move(coeff);
  }
  return p;
}

QPoly QPoly::one_plus_q_to(unsigned power) {
  QPoly p;
  p.coeffs_.resize(power + 1);
  for (unsigned k = 0; k <= power; ++k) p.coeffs_[k] = binomial(power, k);
  return p;
}

QPoly QPoly::geometric(unsigned lo, unsigned hi) {
  if (lo > hi) throw InvalidInputError("QPoly::geometric: lo > hi");
  QPoly p;
  p.coeffs_.assign(hi + 1, Bigint(0));
  for (unsigned k = lo; k <= hi; ++k) p.coeffs_[k] = 1;
  return p;
}

Bigint QPoly::coeff(unsigned degree) const {
  if (degree >= coeffs_.size()) return 0;
  return coeffs_[degree];
}

Bigint QPoly::eval_at_one() const {
  Bigint s = 0;
  for (const Bigint& c : coeffs_) s += c;
  return s;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Bigint> prod(coeffs_.size() + rhs.coeffs_.size() - 1, Bigint(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Bigint& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Bigint& c : coeffs_) c *= scalar;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly p = *this;
  for (Bigint& c : p.coeffs_) c = -c;
  return p;
}

QPoly QPoly::shifted(unsigned k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : QPoly();
  QPoly p;
  p.coeffs_.assign(coeffs_.size() + k, Bigint(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p.coeffs_[i + k] = coeffs_[i];
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Bigint& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    Bigint mag = negative ? Bigint(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (k == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "q";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

QPoly fibonacci_polynomial(unsigned r) {
  QPoly p;
  if (r == 0) return p;
  for (unsigned k = 0; 2 * k <= r - 1; ++k)
    p += QPoly::monomial(k, binomial(r - 1 - k, k));
  return p;
}

}  // namespace weylalt

#include "weylalt/rootsys.hpp"

#include <numeric>
#include <sstream>

namespace weylalt {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

}  // namespace

EpsVector::EpsVector(std::vector<std::int64_t> coords)
    : num_(std::move(coords)), den_(1) {}

EpsVector::EpsVector(std::vector<std::int64_t> numerators, std::int64_t denominator)
    : num_(std::move(numerators)), den_(denominator) {
  if (den_ == 0) throw InvalidInputError("EpsVector: zero denominator");
  normalize();
}

EpsVector EpsVector::zero(std::size_t n) {
  return EpsVector(std::vector<std::int64_t>(n, 0));
}

void EpsVector::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  std::int64_t g = den_;
  for (auto x : num_) {
    g = gcd64(g, x);
    if (g == 1) break;
  }
  if (g > 1) {
    den_ /= g;
    for (auto& x : num_) x /= g;
  }
}

std::int64_t EpsVector::integer_at(std::size_t k) const {
  if (den_ != 1)
    throw InvalidInputError("EpsVector: integer access on a non-integral vector");
  return num_.at(k);
}

std::vector<std::int64_t> EpsVector::integer_coords() const {
  if (den_ != 1)
    throw InvalidInputError("EpsVector: integer access on a non-integral vector");
  return num_;
}

bool EpsVector::is_zero() const {
  for (auto x : num_)
    if (x != 0) return false;
  return true;
}

bool EpsVector::coordinate_sum_is_zero() const {
  std::int64_t s = 0;
  for (auto x : num_) s += x;
  return s == 0;
}

bool EpsVector::is_weakly_decreasing() const {
  for (std::size_t k = 1; k < num_.size(); ++k)
    if (num_[k - 1] < num_[k]) return false;
  return true;
}

EpsVector EpsVector::operator+(const EpsVector& rhs) const {
  if (size() != rhs.size())
    throw InvalidInputError("EpsVector: size mismatch in addition");
  const std::int64_t g = gcd64(den_, rhs.den_);
  const std::int64_t l = den_ / g * rhs.den_;
  const std::int64_t a = l / den_, b = l / rhs.den_;
  std::vector<std::int64_t> out(size());
  for (std::size_t k = 0; k < size(); ++k) out[k] = num_[k] * a + rhs.num_[k] * b;
  return EpsVector(std::move(out), l);
}

EpsVector EpsVector::operator-(const EpsVector& rhs) const {
  if (size() != rhs.size())
    throw InvalidInputError("EpsVector: size mismatch in subtraction");
  const std::int64_t g = gcd64(den_, rhs.den_);
  const std::int64_t l = den_ / g * rhs.den_;
  const std::int64_t a = l / den_, b = l / rhs.den_;
  std::vector<std::int64_t> out(size());
  for (std::size_t k = 0; k < size(); ++k) out[k] = num_[k] * a - rhs.num_[k] * b;
  return EpsVector(std::move(out), l);
}

std::string EpsVector::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (k) out << ", ";
    if (den_ == 1) {
      out << num_[k];
    } else {
      const std::int64_t g = gcd64(num_[k], den_);
      if (num_[k] == 0)
        out << 0;
      else
        out << num_[k] / g << "/" << den_ / g;
    }
  }
  out << ")";
  return out.str();
}

RankContext::RankContext(int rank) : rank_(rank) {
  if (rank < 1) throw InvalidRankError("RankContext: rank must be at least 1");
  const int nn = rank + 1;

  for (int i = 1; i <= nn; ++i) {
    for (int j = i + 1; j <= nn; ++j) {
      std::vector<std::int64_t> c(nn, 0);
      c[i - 1] = 1;
      c[j - 1] = -1;
      positive_roots_.emplace_back(std::move(c));
      spans_.emplace_back(i, j);
    }
  }

  for (int i = 1; i <= rank; ++i) {
    std::vector<std::int64_t> c(nn, 0);
    c[i - 1] = 1;
    c[i] = -1;
    simple_roots_.emplace_back(std::move(c));
  }

  std::vector<std::int64_t> rho(nn);
  for (int k = 0; k < nn; ++k) rho[k] = nn - 1 - k;
  rho_ = EpsVector(std::move(rho));

  std::vector<std::int64_t> hr(nn, 0);
  hr[0] = 1;
  hr[nn - 1] = -1;
  highest_root_ = EpsVector(std::move(hr));
}

std::int64_t fundamental_pairing(const RankContext& ctx, int i, const EpsVector& xi) {
  if (i < 1 || i > ctx.rank())
    throw InvalidIndexError("fundamental_pairing: index must be in 1..rank");
  require_size(ctx, xi, "fundamental_pairing");
  require_sum_zero(xi, "fundamental_pairing");
  std::int64_t s = 0;
  for (int k = 0; k < i; ++k) s += xi.numerators()[k];
  if (s % xi.denominator() != 0)
    throw InvalidWeightError(
        "fundamental_pairing: pairing value is not an integer for this weight");
  return s / xi.denominator();
}

EpsVector from_fundamental_coeffs(const RankContext& ctx,
                                  const std::vector<std::int64_t>& coeffs) {
  if (static_cast<int>(coeffs.size()) != ctx.rank())
    throw InvalidInputError(
        "from_fundamental_coeffs: expected exactly rank coefficients");
  const int nn = ctx.n();
  std::int64_t weighted = 0;  // sum_i i * a_i, the total to spread over n slots
  for (int i = 1; i <= ctx.rank(); ++i) weighted += i * coeffs[i - 1];

  std::vector<std::int64_t> num(nn);
  std::int64_t suffix = 0;
  for (int k = nn; k >= 1; --k) {
    if (k <= ctx.rank()) suffix += coeffs[k - 1];
    num[k - 1] = suffix * nn - weighted;
  }
  return EpsVector(std::move(num), nn);
}

std::vector<std::int64_t> fundamental_coeffs(const RankContext& ctx,
                                             const EpsVector& xi) {
  require_size(ctx, xi, "fundamental_coeffs");
  std::vector<std::int64_t> out(ctx.rank());
  for (int i = 0; i < ctx.rank(); ++i) {
    const std::int64_t d = xi.numerators()[i] - xi.numerators()[i + 1];
    if (d % xi.denominator() != 0)
      throw InvalidWeightError(
          "fundamental_coeffs: vector is not an integral weight");
    out[i] = d / xi.denominator();
  }
  return out;
}

bool is_root(const RankContext& ctx, const EpsVector& v) {
  if (v.size() != static_cast<std::size_t>(ctx.n()) || !v.is_integral())
    return false;
  int plus = 0, minus = 0;
  for (auto x : v.numerators()) {
    if (x == 1)
      ++plus;
    else if (x == -1)
      ++minus;
    else if (x != 0)
      return false;
  }
  return plus == 1 && minus == 1;
}

bool is_integral_weight(const EpsVector& v) {
  for (std::size_t k = 1; k < v.size(); ++k)
    if ((v.numerators()[k] - v.numerators()[k - 1]) % v.denominator() != 0)
      return false;
  return true;
}

void require_size(const RankContext& ctx, const EpsVector& v, const char* what) {
  if (v.size() != static_cast<std::size_t>(ctx.n()))
    throw InvalidInputError(std::string(what) + ": vector has " +
                            std::to_string(v.size()) + " coordinates, expected " +
                            std::to_string(ctx.n()));
}

void require_sum_zero(const EpsVector& v, const char* what) {
  if (!v.coordinate_sum_is_zero())
    throw InvalidWeightError(std::string(what) +
                             ": coordinate sum must be zero");
}

void require_integral_weight(const EpsVector& v, const char* what) {
  if (!is_integral_weight(v))
    throw InvalidWeightError(std::string(what) +
                             ": not an integral weight (consecutive coordinate "
                             "differences must be integers)");
}

void require_dominant(const EpsVector& v, const char* what) {
  if (!v.is_weakly_decreasing())
    throw InvalidWeightError(std::string(what) +
                             ": weight is not dominant (coordinates must be "
                             "weakly decreasing)");
}

}  // namespace weylalt

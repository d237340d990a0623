#include "weylalt/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "weylalt/errors.hpp"

namespace weylalt {

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  const int nn = static_cast<int>(img_.size());
  if (nn == 0) throw InvalidInputError("Permutation: empty one-line notation");
  std::vector<bool> seen(nn, false);
  for (int v : img_) {
    if (v < 1 || v > nn || seen[v - 1])
      throw InvalidInputError("Permutation: one-line notation must list each of "
                              "1..n exactly once");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidInputError("Permutation: n must be at least 1");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::simple_reflection(int n, int i) {
  if (i < 1 || i >= n)
    throw InvalidIndexError("simple_reflection: index must be in 1..n-1");
  Permutation p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int k = 0; k < n(); ++k) inv[img_[k] - 1] = k + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (n() != rhs.n())
    throw InvalidInputError("Permutation: size mismatch in composition");
  std::vector<int> out(img_.size());
  for (int k = 0; k < n(); ++k) out[k] = img_[rhs.img_[k] - 1];
  return Permutation(std::move(out));
}

int Permutation::length() const {
  int inv = 0;
  for (int a = 0; a < n(); ++a)
    for (int b = a + 1; b < n(); ++b)
      if (img_[a] > img_[b]) ++inv;
  return inv;
}

int Permutation::sign() const { return length() % 2 == 0 ? 1 : -1; }

bool Permutation::is_identity() const {
  for (int k = 0; k < n(); ++k)
    if (img_[k] != k + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int k = 0; k < n(); ++k) {
    if (k) out << " ";
    out << img_[k];
  }
  out << "]";
  return out.str();
}

EpsVector act(const Permutation& sigma, const EpsVector& xi) {
  if (static_cast<std::size_t>(sigma.n()) != xi.size())
    throw InvalidInputError("act: permutation and vector sizes differ");
  std::vector<std::int64_t> out(xi.size());
  for (int k = 0; k < sigma.n(); ++k)
    out[sigma.image(k + 1) - 1] = xi.numerators()[k];
  return EpsVector(std::move(out), xi.denominator());
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20)
    throw InvalidInputError("factorial: argument must be in 0..20");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

Permutation nth_permutation(int n, std::uint64_t index) {
  if (index >= factorial(n))
    throw InvalidIndexError("nth_permutation: index out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> img;
  img.reserve(n);
  std::uint64_t rem = index;
  for (int k = n - 1; k >= 0; --k) {
    const std::uint64_t block = factorial(k);
    const std::size_t pick = static_cast<std::size_t>(rem / block);
    rem %= block;
    img.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Permutation(std::move(img));
}

void for_each_permutation(int n,
                          const std::function<void(const Permutation&)>& fn) {
  for_each_permutation_in_range(n, 0, factorial(n), fn);
}

void for_each_permutation_in_range(
    int n, std::uint64_t first, std::uint64_t last,
    const std::function<void(const Permutation&)>& fn) {
  const std::uint64_t total = factorial(n);
  if (first > last || last > total)
    throw InvalidIndexError("for_each_permutation_in_range: bad range");
  if (first == last) return;
  Permutation p = nth_permutation(n, first);
  std::vector<int> img = p.one_line();
  for (std::uint64_t idx = first; idx < last; ++idx) {
    fn(Permutation(img));
    if (!std::next_permutation(img.begin(), img.end())) break;
  }
}

Permutation product_of_simple_reflections(int n, std::span<const int> indices) {
  Permutation p = Permutation::identity(n);
  for (int i : indices) p = p * Permutation::simple_reflection(n, i);
  return p;
}

bool has_bounded_displacement(const Permutation& sigma) {
  for (int i = 1; i <= sigma.n(); ++i)
    if (std::abs(sigma.image(i) - i) > 1) return false;
  return true;
}

bool is_commuting_reflection_product(const Permutation& sigma) {
  int i = 1;
  while (i <= sigma.n()) {
    if (sigma.image(i) == i) {
      ++i;
    } else if (i < sigma.n() && sigma.image(i) == i + 1 &&
               sigma.image(i + 1) == i) {
      i += 2;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace weylalt

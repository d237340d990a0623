#pragma once

// Internal helpers for the modules that sweep S_n: building the translate
// sigma(lambda + rho) - (mu + rho) for each permutation without rational
// arithmetic in the loop, and splitting the lexicographic index space into
// chunks for worker threads.  Not installed.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "weylalt/rootsys.hpp"

namespace weylalt::detail {

struct ScanInputs {
  std::vector<std::int64_t> a;  // lambda + rho, scaled to the common denominator
  std::vector<std::int64_t> b;  // mu + rho, same denominator
  std::int64_t den = 1;
};

inline ScanInputs prepare_scan(const RankContext& ctx, const EpsVector& lambda,
                               const EpsVector& mu) {
  const EpsVector lp = lambda + ctx.rho();
  const EpsVector mp = mu + ctx.rho();
  const std::int64_t g = std::gcd(lp.denominator(), mp.denominator());
  ScanInputs in;
  in.den = lp.denominator() / g * mp.denominator();
  in.a.resize(ctx.n());
  in.b.resize(ctx.n());
  const std::int64_t fa = in.den / lp.denominator();
  const std::int64_t fb = in.den / mp.denominator();
  for (int k = 0; k < ctx.n(); ++k) {
    in.a[k] = lp.numerators()[k] * fa;
    in.b[k] = mp.numerators()[k] * fb;
  }
  return in;
}

// Translate entry at slot sigma(k) is a[k] - b[sigma(k)].  The division is
// exact whenever lambda - mu lies in the root lattice, which callers check
// before scanning.
inline void build_translate(const ScanInputs& in, const std::vector<int>& img,
                            std::vector<std::int64_t>& t) {
  for (std::size_t k = 0; k < img.size(); ++k)
    t[img[k] - 1] = (in.a[k] - in.b[img[k] - 1]) / in.den;
}

// The positivity test on a translate that is known to sum to zero: all
// leading partial sums through n-1 coordinates nonnegative and total zero.
inline bool translate_is_positive(const std::vector<std::int64_t>& t) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    s += t[k];
    if (s < 0) return false;
  }
  return s + t.back() == 0;
}

inline int inversions(const std::vector<int>& img) {
  int inv = 0;
  for (std::size_t a = 0; a < img.size(); ++a)
    for (std::size_t b = a + 1; b < img.size(); ++b)
      if (img[a] > img[b]) ++inv;
  return inv;
}

// Bounds of chunk w when [0, total) is split as evenly as possible across
// `workers` chunks, preserving order.
inline std::pair<std::uint64_t, std::uint64_t> chunk_bounds(std::uint64_t total,
                                                            unsigned workers,
                                                            unsigned w) {
  const std::uint64_t base = total / workers;
  const std::uint64_t rem = total % workers;
  const std::uint64_t lo = base * w + std::min<std::uint64_t>(w, rem);
  const std::uint64_t hi = base * (w + 1) + std::min<std::uint64_t>(w + 1, rem);
  return {lo, hi};
}

}  // namespace weylalt::detail

#include "weylalt/bigint.hpp"

#include <limits>

namespace weylalt {

Bigint binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Bigint out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Bigint pow2(unsigned long e) {
  Bigint out = 1;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), e);
  return out;
}

Bigint fibonacci(unsigned long k) {
  Bigint a = 0, b = 1;  // F(0), F(1)
  for (unsigned long i = 0; i < k; ++i) {
    Bigint next = a + b;
    a = b;
    b = next;
  }
  return a;
}

std::string to_decimal(const Bigint& v) { return v.get_str(); }

bool fits_int64(const Bigint& v) {
  static const Bigint lo = Bigint(std::numeric_limits<long>::min());
  static const Bigint hi = Bigint(std::numeric_limits<long>::max());
  return v >= lo && v <= hi;
}

}  // namespace weylalt

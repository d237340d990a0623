#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace weylalt {

// Exact signed integer of arbitrary size.  Partition counts grow like
// 2^(r-1) and identity checks run to rank 200, so fixed-width integers
// are not an option anywhere a count or coefficient is stored.
using Bigint = mpz_class;

// C(n, k), zero when k > n.
Bigint binomial(unsigned long n, unsigned long k);

// 2^e.
Bigint pow2(unsigned long e);

// Fibonacci numbers with F(1) = F(2) = 1, computed by the recurrence.
// F(0) is defined as 0 for convenience.
Bigint fibonacci(unsigned long k);

// Decimal rendering (Bigint already prints via iostream; this is for
// call sites that want a std::string without a stream).
std::string to_decimal(const Bigint& v);

// True when v fits in a signed 64-bit integer.
bool fits_int64(const Bigint& v);

}  // namespace weylalt

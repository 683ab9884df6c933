#pragma once

#include <gmpxx.h>

namespace partrec {

// Arbitrary-precision table value. p(n) exceeds 64 bits near n = 400, so
// every count is a GMP integer; exponents and indices stay native 64-bit.
using Count = mpz_class;

}  // namespace partrec

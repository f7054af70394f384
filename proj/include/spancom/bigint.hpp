#pragma once

#include <gmpxx.h>

#include <string>

#include "spancom/errors.hpp"

namespace spancom {

// Exact arbitrary-precision integer. Everything downstream of the closed
// forms must stay exact; no operation in this library touches floating point.
using BigInt = mpz_class;

// Binomial coefficient C(a, b) with the convention C(a, b) = 0 for b < 0 or
// b > a, so formulas whose correction terms fall out of range collapse to a
// single expression. Requires a >= 0 (NegativeUpper otherwise: valid callers
// never produce it).
BigInt binom(long a, long b);

std::string to_decimal(const BigInt& value);

} // namespace spancom

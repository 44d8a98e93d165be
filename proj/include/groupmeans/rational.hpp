#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace groupmeans {

// Exact rational arithmetic; every certified quantity in the library is a Rat.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

// Accepts "num/den", "num", or a decimal-free integer string. Throws
// parse_error on anything else (including den == 0).
Rat rat_from_string(const std::string& text);

// "num/den", or "num" when the denominator is 1.
std::string rat_to_string(const Rat& q);

// Fixed-point decimal rendering for uncertified estimates.
std::string rat_to_decimal(const Rat& q, int digits = 9);

// Exact conversion; doubles are dyadic rationals.
Rat rat_from_double(double x);
double rat_to_double(const Rat& q);

Rat rat_floor(const Rat& q);
Rat rat_ceil(const Rat& q);

}  // namespace groupmeans

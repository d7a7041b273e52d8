#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace crofton {

// Exact rational coordinate type. All combinatorial predicates are evaluated
// over these; floating point only enters through distance evaluation.
using Rat = mpq_class;

// Exact conversion. Throws DomainError on NaN/infinity.
Rat rat_from_double(double v);

// Parses a decimal literal ("-12.5", "3e-7", "0.1") or a fraction "num/den"
// into an exact rational. Throws ParseError on malformed text.
Rat rat_from_decimal(std::string_view text);

double rat_to_double(const Rat& v);

inline int rat_sign(const Rat& v) { return sgn(v); }

// Exact decimal rendering when the denominator is of the form 2^a * 5^b
// (always the case for values produced here), "num/den" otherwise.
std::string rat_to_decimal_string(const Rat& v);

}  // namespace crofton

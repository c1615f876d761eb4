#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace linfiso {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; values built from raw parts go through
// make_rational so the invariant holds everywhere.
using Rational = mpq_class;
using VectorQ = std::vector<Rational>;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "p/q", "-12", "3.25", "-.5", "+7". Throws Error(parse) otherwise.
Rational parse_rational(std::string_view token);

// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& value);

}  // namespace linfiso

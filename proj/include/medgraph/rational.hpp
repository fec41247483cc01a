#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace medgraph {

using Rational = mpq_class;

// Accepts "a", "-a" or "a/b"; the result is canonicalized.
Rational parse_rational(std::string_view text);

// Canonical num/den; mpq comparisons assume canonical operands.
Rational fraction(long num, long den);

std::string to_string(const Rational& q);

} // namespace medgraph

#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

namespace hqds {

// Exact rational scalar. mpq_class keeps values canonical: lowest terms,
// positive denominator.
using Rational = mpq_class;

// Parses "p", "-p", "p/q". Rejects q == 0, embedded whitespace, empty input.
std::optional<Rational> parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

// Exact square root when r is a perfect square of a rational, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& r);

// Nearest rational with denominator <= max_den (continued-fraction convergents).
// Returns nullopt when no convergent approximates x to within tol.
std::optional<Rational> reconstruct_rational(double x, unsigned long max_den,
                                             double tol);

}  // namespace hqds

#ifndef KDVGAL_RATIONAL_HPP
#define KDVGAL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace kdvgal {

using Integer = mpz_class;
using Rational = mpq_class;

// Renders "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Parses "p" or "p/q". With `canonical` set, rejects non-reduced input and
// zero/negative denominators instead of normalizing them.
Rational parse_rational(std::string_view text, bool canonical = false);

// p/q in lowest terms; q must be nonzero.
Rational fraction(long p, long q);

Rational factorial(int n);

// n!! for n >= -1, with (-1)!! = 0!! = 1.
Rational double_factorial(int n);

// base^e for any integer e; throws DomainError on 0^(negative).
Rational power(const Rational& base, int e);

Rational binomial(int n, int k);

// B_0..B_n with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(int n);

}  // namespace kdvgal

#endif

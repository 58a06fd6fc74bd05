#ifndef AIXI_CORE_RATIONAL_HPP
#define AIXI_CORE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace aixi {

// Exact rational used for every probability, credit and value in the math core.
using Rational = mpq_class;

// num/den in lowest terms; mpq_class(num, den) alone does not reduce.
Rational ratio(long num, long den);

// 2^{-bits}, exact.
Rational pow2_neg(unsigned bits);

// Parses "3", "-1/2" or "0.75" into an exact rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

// Smallest integer >= q.
mpz_class ceil(const Rational& q);

// Largest integer <= q.
mpz_class floor(const Rational& q);

}  // namespace aixi

#endif  // AIXI_CORE_RATIONAL_HPP

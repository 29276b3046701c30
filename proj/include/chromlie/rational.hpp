#pragma once

#include <gmpxx.h>

#include <string>

namespace chromlie {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);
/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

Integer factorial(unsigned long n);
/// Binomial coefficient C(n, k) for arbitrary integer n (falling-factorial form).
Integer binomial(const Integer& n, unsigned long k);

/// Classical number-theoretic Moebius function.
int number_mobius(long n);

/// num/den in lowest terms; den must be non-zero.
Rational make_rational(long num, long den);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace chromlie

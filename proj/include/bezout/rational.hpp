#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "bezout/errors.hpp"

namespace bezout {

using Integer = boost::multiprecision::mpz_int;

// Exact rational scalar. GMP keeps every value canonical: lowest terms,
// denominator > 0, so equality is plain representation equality.
using Rational = boost::multiprecision::mpq_rational;

// Constructs num/den with an explicit zero-denominator guard (GMP would SIGFPE).
Rational make_rational(const Integer& num, const Integer& den);

// Small-integer convenience; den defaults to 1.
Rational rat(long long num, long long den = 1);

// Accepts "p" or "p/q" with optional leading sign on p.
Rational parse_rational(const std::string& text);

// Canonical text: "p" when den = 1, else "p/q".
std::string rational_str(const Rational& q);

Integer factorial(int n);

// 0 unless 0 <= k <= n.
Integer binomial(int n, int k);

// n(n-1)...(n-k+1); equals 0 when k > n >= 0.
Integer falling(int n, int k);

} // namespace bezout

#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace lpadic {

using Integer = mpz_class;
using Rational = mpq_class;

Integer ipow(const Integer& base, unsigned long exponent);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Least nonnegative residue of x modulo n (n >= 1).
Integer mod(const Integer& x, const Integer& n);

/// Floor of a rational number.
Integer floor(const Rational& q);
Rational fract(const Rational& q);

bool is_prime(const Integer& n);

/// Strips every factor p from x (x != 0) and returns how many were removed.
long remove_factor(Integer& x, const Integer& p);

/// p-adic valuation of a nonzero rational.
long valuation(const Rational& q, const Integer& p);

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<Integer, unsigned long>> factorize(const Integer& n);

/// All positive divisors of n >= 1 in increasing order.
std::vector<Integer> divisors(const Integer& n);

Integer euler_phi(const Integer& n);

Integer binomial(unsigned long n, unsigned long k);

/// "num/den" in lowest terms, or just "num" for integers.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Accepts "a", "-a", "a/b"; throws InvalidArgument otherwise.
Rational parse_rational(const std::string& text);

/// Checked narrowing for values used as table indices or loop bounds.
unsigned long to_ulong(const Integer& n);
long to_long(const Integer& n);

}  // namespace lpadic

#pragma once

#include "lpadic/integer.hpp"
#include "lpadic/polynomial.hpp"

namespace lpadic {

/// B'_n from the recurrence B'_n = 1 - sum_{k<n} C(n,k) B'_k / (n-k+1).
/// This is the t/(1 - e^{-t}) convention, so B'_1 = +1/2.
Rational bernoulli_prime(unsigned long n);

/// B_n = (-1)^n B'_n, the t/(e^t - 1) convention (B_1 = -1/2).
Rational bernoulli(unsigned long n);

/// B_n(X) = sum_i C(n,i) B_i X^{n-i}.
RationalPolynomial bernoulli_poly(unsigned long n);

Rational bernoulli_poly_eval(unsigned long n, const Rational& x);

/// Memo table bound for B'_n (default 64). Values past the bound are still
/// computed, just not retained.
void set_bernoulli_cache_limit(std::size_t limit);
std::size_t bernoulli_cache_limit();

}  // namespace lpadic

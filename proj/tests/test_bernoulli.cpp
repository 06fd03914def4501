#include <doctest.h>

#include <thread>

#include "lpadic/bernoulli.hpp"
#include "lpadic/cyclotomic.hpp"

using namespace lpadic;

namespace {

// Akiyama-Tanigawa algorithm; yields B_n with B_1 = +1/2.
std::vector<Rational> akiyama_tanigawa(unsigned long count) {
  std::vector<Rational> out, row(count + 1);
  for (unsigned long m = 0; m <= count; ++m) {
    row[m] = Rational(1, m + 1);
    for (unsigned long j = m; j >= 1; --j) {
      row[j - 1] = Rational(j) * (row[j - 1] - row[j]);
      row[j - 1].canonicalize();
    }
    out.push_back(row[0]);
  }
  return out;
}

}  // namespace

TEST_CASE("bernoulli_prime and bernoulli") {
  CHECK(bernoulli_prime(0) == 1);
  CHECK(bernoulli_prime(1) == Rational(1, 2));
  CHECK(bernoulli_prime(2) == Rational(1, 6));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (unsigned long k = 1; k <= 10; ++k) CHECK(bernoulli(2 * k + 1) == 0);

  const auto oracle = akiyama_tanigawa(40);
  for (unsigned long n = 0; n <= 40; ++n) CHECK(bernoulli_prime(n) == oracle[n]);
}

TEST_CASE("values past the cache limit") {
  const std::size_t limit = bernoulli_cache_limit();
  set_bernoulli_cache_limit(8);
  const auto oracle = akiyama_tanigawa(30);
  CHECK(bernoulli_prime(30) == oracle[30]);
  set_bernoulli_cache_limit(limit);
  CHECK(bernoulli_prime(30) == oracle[30]);
}

TEST_CASE("concurrent readers agree") {
  std::vector<Rational> results(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i) {
    threads.emplace_back([&results, i] { results[i] = bernoulli(50); });
  }
  for (auto& t : threads) t.join();
  for (const auto& r : results) CHECK(r == results.front());
}

TEST_CASE("bernoulli polynomials") {
  CHECK(bernoulli_poly(0) == RationalPolynomial::constant(1));
  CHECK(bernoulli_poly(1) == RationalPolynomial({Rational(-1, 2), Rational(1)}));
  CHECK(bernoulli_poly(2) == RationalPolynomial({Rational(1, 6), Rational(-1), Rational(1)}));
  CHECK(bernoulli_poly(2).to_string() == "X^2 - X + 1/6");
  CHECK(bernoulli_poly_eval(2, 0) == Rational(1, 6));
  CHECK(bernoulli_poly_eval(2, Rational(1, 3)) == Rational(-1, 18));
  CHECK(bernoulli_poly_eval(1, 1) == Rational(1, 2));
  for (unsigned long n = 0; n <= 20; ++n) {
    CHECK(bernoulli_poly(n).degree() == static_cast<long>(n));
    CHECK(bernoulli_poly(n).coefficient(n) == 1);
    CHECK(bernoulli_poly_eval(n, 1) == (n == 1 ? Rational(1, 2) : bernoulli(n)));
  }
}

TEST_CASE("sum identity") {
  for (unsigned long n = 0; n <= 20; ++n) {
    RationalPolynomial sum;
    for (unsigned long k = 0; k <= n; ++k) sum = sum + bernoulli_poly(k) * Rational(binomial(n + 1, k));
    CHECK(sum == RationalPolynomial::monomial(Rational(n + 1), n));
  }
}

TEST_CASE("Faulhaber against direct summation") {
  for (unsigned long q = 0; q <= 8; ++q) {
    for (unsigned long m = 1; m <= 50; ++m) {
      Integer direct = 0;
      for (unsigned long k = 0; k < m; ++k) direct += (q == 0 ? Integer(1) : ipow(Integer(k), q));
      Rational closed = (bernoulli_poly_eval(q + 1, m) - bernoulli_poly_eval(q + 1, 0)) / Rational(q + 1);
      closed.canonicalize();
      CHECK(closed == Rational(direct));
    }
  }
}

TEST_CASE("polynomial division and cyclotomic polynomials") {
  const RationalPolynomial x2m1({Rational(-1), Rational(0), Rational(1)});
  const RationalPolynomial xm1({Rational(-1), Rational(1)});
  const auto [q, r] = divmod(x2m1, xm1);
  CHECK(q == RationalPolynomial({Rational(1), Rational(1)}));
  CHECK(r.is_zero());
  CHECK(cyclotomic_polynomial(4) == RationalPolynomial({Rational(1), Rational(0), Rational(1)}));
  CHECK(cyclotomic_polynomial(6) == RationalPolynomial({Rational(1), Rational(-1), Rational(1)}));
  // product over divisors of n is X^n - 1
  for (unsigned long n = 1; n <= 24; ++n) {
    RationalPolynomial prod = RationalPolynomial::constant(1);
    for (unsigned long d = 1; d <= n; ++d) {
      if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
    }
    CHECK(prod == RationalPolynomial::monomial(1, n) - RationalPolynomial::constant(1));
  }
}

TEST_CASE("cyclotomic numbers") {
  const CyclotomicNumber z = CyclotomicNumber::root_power(4, 1);
  CHECK(z * z == CyclotomicNumber::from_rational(4, -1));
  CHECK(CyclotomicNumber::root_power(4, 2).is_rational());
  CHECK(CyclotomicNumber::root_power(4, -1) == CyclotomicNumber::root_power(4, 3));
  CHECK((z + CyclotomicNumber::root_power(4, 3)).is_zero());
  CHECK(CyclotomicNumber::from_rational(6, Rational(3, 2)).rational_value() == Rational(3, 2));
}

#include "lpadic/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace lpadic {

namespace {

struct BernoulliCache {
  std::mutex mutex;
  std::vector<Rational> values{Rational(1)};
  std::size_t limit = 64;
};

BernoulliCache& cache() {
  static BernoulliCache instance;
  return instance;
}

Rational next_bernoulli_prime(const std::vector<Rational>& previous) {
  const unsigned long n = previous.size();
  Rational sum = 0;
  for (unsigned long k = 0; k < n; ++k) {
    sum += Rational(binomial(n, k)) * previous[k] / Rational(n - k + 1);
  }
  Rational out = 1 - sum;
  out.canonicalize();
  return out;
}

}  // namespace

Rational bernoulli_prime(unsigned long n) {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  if (n < c.values.size()) return c.values[n];
  std::vector<Rational> values = c.values;
  while (values.size() <= n) values.push_back(next_bernoulli_prime(values));
  const std::size_t keep = std::max(c.values.size(), std::min(values.size(), c.limit + 1));
  c.values.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(keep));
  return values[n];
}

Rational bernoulli(unsigned long n) {
  const Rational b = bernoulli_prime(n);
  return n % 2 == 0 ? b : Rational(-b);
}

RationalPolynomial bernoulli_poly(unsigned long n) {
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (unsigned long i = 0; i <= n; ++i) coeffs[n - i] = Rational(binomial(n, i)) * bernoulli(i);
  return RationalPolynomial(std::move(coeffs));
}

Rational bernoulli_poly_eval(unsigned long n, const Rational& x) { return bernoulli_poly(n).eval(x); }

void set_bernoulli_cache_limit(std::size_t limit) {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  c.limit = limit;
  if (c.values.size() > limit + 1) c.values.resize(limit + 1);
}

std::size_t bernoulli_cache_limit() {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  return c.limit;
}

}  // namespace lpadic

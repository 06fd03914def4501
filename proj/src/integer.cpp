#include "lpadic/integer.hpp"

#include <algorithm>

#include "lpadic/errors.hpp"

namespace lpadic {

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer result;
  mpz_gcd(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer result;
  mpz_lcm(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

Integer mod(const Integer& x, const Integer& n) {
  if (n < 1) throw InvalidArgument("modulus must be positive");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational fract(const Rational& q) {
  Rational r = q - Rational(floor(q));
  r.canonicalize();
  return r;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

long remove_factor(Integer& x, const Integer& p) {
  if (x == 0) throw InvalidArgument("remove_factor: zero has no finite valuation");
  if (p < 2) throw InvalidArgument("remove_factor: base must be at least 2");
  return static_cast<long>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rational& q, const Integer& p) {
  Integer num = q.get_num();
  Integer den = q.get_den();
  return remove_factor(num, p) - remove_factor(den, p);
}

std::vector<std::pair<Integer, unsigned long>> factorize(const Integer& n) {
  if (n < 1) throw InvalidArgument("factorize: n must be positive");
  std::vector<std::pair<Integer, unsigned long>> out;
  Integer rest = n;
  for (Integer q = 2; q * q <= rest; ++q) {
    if (rest % q != 0) continue;
    unsigned long e = 0;
    while (rest % q == 0) {
      rest /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (rest > 1) out.emplace_back(rest, 1);
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& [q, e] : factorize(n)) {
    const std::size_t count = out.size();
    Integer power = 1;
    for (unsigned long i = 0; i < e; ++i) {
      power *= q;
      for (std::size_t k = 0; k < count; ++k) out.push_back(out[k] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer euler_phi(const Integer& n) {
  Integer phi = n;
  for (const auto& [q, e] : factorize(n)) phi = phi / q * (q - 1);
  return phi;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& n) { return n.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw InvalidArgument("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

unsigned long to_ulong(const Integer& n) {
  if (n < 0 || !n.fits_ulong_p()) throw InvalidArgument("value out of range: " + n.get_str());
  return n.get_ui();
}

long to_long(const Integer& n) {
  if (!n.fits_slong_p()) throw InvalidArgument("value out of range: " + n.get_str());
  return n.get_si();
}

}  // namespace lpadic

#include "lpadic/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "lpadic/errors.hpp"

namespace lpadic {

RationalPolynomial cyclotomic_polynomial(unsigned long n) {
  if (n == 0) throw InvalidArgument("cyclotomic_polynomial: order must be positive");
  static std::mutex mutex;
  static std::map<unsigned long, RationalPolynomial> memo;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  // X^n - 1 = prod_{d | n} Phi_d
  RationalPolynomial phi = RationalPolynomial::monomial(1, n) - RationalPolynomial::constant(1);
  for (const Integer& d : divisors(Integer(n))) {
    if (d == n) continue;
    phi = divmod(phi, cyclotomic_polynomial(d.get_ui())).first;
  }
  std::lock_guard<std::mutex> lock(mutex);
  memo.emplace(n, phi);
  return phi;
}

CyclotomicNumber::CyclotomicNumber(unsigned long order) : CyclotomicNumber(order, RationalPolynomial()) {}

CyclotomicNumber::CyclotomicNumber(unsigned long order, RationalPolynomial value) : order_(order) {
  if (order == 0) throw InvalidArgument("root of unity order must be positive");
  value_ = divmod(value, cyclotomic_polynomial(order)).second;
}

CyclotomicNumber CyclotomicNumber::from_rational(unsigned long order, const Rational& q) {
  return CyclotomicNumber(order, RationalPolynomial::constant(q));
}

CyclotomicNumber CyclotomicNumber::root_power(unsigned long order, long exponent) {
  const long o = static_cast<long>(order);
  const long e = ((exponent % o) + o) % o;
  return CyclotomicNumber(order, RationalPolynomial::monomial(1, static_cast<std::size_t>(e)));
}

CyclotomicNumber CyclotomicNumber::from_power_coefficients(unsigned long order,
                                                           const std::vector<Rational>& coefficients) {
  return CyclotomicNumber(order, RationalPolynomial(coefficients));
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw InvalidArgument("cyclotomic number " + to_string() + " is not rational");
  return value_.coefficient(0);
}

void CyclotomicNumber::require_same_order(const CyclotomicNumber& other) const {
  if (order_ != other.order_) throw InvalidArgument("cyclotomic numbers of different orders");
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& other) const {
  require_same_order(other);
  return CyclotomicNumber(order_, value_ + other.value_);
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& other) const {
  require_same_order(other);
  return CyclotomicNumber(order_, value_ - other.value_);
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& other) const {
  require_same_order(other);
  return CyclotomicNumber(order_, value_ * other.value_);
}

CyclotomicNumber CyclotomicNumber::operator*(const Rational& scalar) const {
  return CyclotomicNumber(order_, value_ * scalar);
}

PadicNum CyclotomicNumber::embed(const PadicNum& zeta_value, long relprec) const {
  const Integer& p = zeta_value.prime();
  PadicNum acc = PadicNum::exact_zero(p);
  PadicNum power = PadicNum::one(p, relprec);
  for (const Rational& c : value_.coefficients()) {
    if (c != 0) acc += PadicNum::from_rational(p, c, relprec) * power;
    power *= zeta_value;
  }
  return acc;
}

std::string CyclotomicNumber::to_string() const {
  std::string s = value_.to_string();
  for (auto& ch : s) {
    if (ch == 'X') ch = 'z';
  }
  return s;
}

}  // namespace lpadic

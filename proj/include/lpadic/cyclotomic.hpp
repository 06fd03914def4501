#pragma once

#include <vector>

#include "lpadic/padic.hpp"
#include "lpadic/polynomial.hpp"

namespace lpadic {

/// The n-th cyclotomic polynomial.
RationalPolynomial cyclotomic_polynomial(unsigned long n);

/// An element of Q(zeta) with zeta a primitive root of unity of the given
/// order, stored as a polynomial in zeta reduced modulo the cyclotomic
/// polynomial. The representation is canonical, so == is field equality.
///
/// Character values live in the (p-1)-st roots of unity; keeping sums of
/// them in this form lets identities be checked exactly before the values
/// are embedded in Q_p.
class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(unsigned long order);

  static CyclotomicNumber from_rational(unsigned long order, const Rational& q);
  static CyclotomicNumber root_power(unsigned long order, long exponent);
  /// sum_e coefficients[e] * zeta^e for e in [0, coefficients.size()).
  static CyclotomicNumber from_power_coefficients(unsigned long order, const std::vector<Rational>& coefficients);

  unsigned long order() const { return order_; }
  const RationalPolynomial& polynomial() const { return value_; }

  bool is_zero() const { return value_.is_zero(); }
  bool is_rational() const { return value_.degree() <= 0; }
  /// Throws InvalidArgument unless is_rational().
  Rational rational_value() const;

  CyclotomicNumber operator+(const CyclotomicNumber& other) const;
  CyclotomicNumber operator-(const CyclotomicNumber& other) const;
  CyclotomicNumber operator*(const CyclotomicNumber& other) const;
  CyclotomicNumber operator*(const Rational& scalar) const;

  bool operator==(const CyclotomicNumber& other) const {
    return order_ == other.order_ && value_ == other.value_;
  }

  /// Image in Q_p under zeta -> zeta_value; coefficients embedded at relprec.
  PadicNum embed(const PadicNum& zeta_value, long relprec) const;

  /// Polynomial in "z" (the chosen root of unity).
  std::string to_string() const;

 private:
  CyclotomicNumber(unsigned long order, RationalPolynomial value);
  void require_same_order(const CyclotomicNumber& other) const;

  unsigned long order_;
  RationalPolynomial value_;
};

}  // namespace lpadic

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpadic/integer.hpp"

namespace lpadic {

/// Dense polynomial over Q; coefficient i multiplies X^i. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(std::size_t i) const;

  Rational eval(const Rational& x) const;

  RationalPolynomial operator+(const RationalPolynomial& other) const;
  RationalPolynomial operator-(const RationalPolynomial& other) const;
  RationalPolynomial operator*(const RationalPolynomial& other) const;
  RationalPolynomial operator*(const Rational& scalar) const;

  bool operator==(const RationalPolynomial& other) const { return coeffs_ == other.coeffs_; }

  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Euclidean division; divisor must be nonzero. Returns (quotient, remainder).
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& dividend,
                                                         const RationalPolynomial& divisor);

}  // namespace lpadic

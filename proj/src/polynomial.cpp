#include "lpadic/polynomial.hpp"

#include <algorithm>

#include "lpadic/errors.hpp"

namespace lpadic {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return RationalPolynomial(std::move(coeffs));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational RationalPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  acc.canonicalize();
  return acc;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& other) const {
  std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coefficient(i) + other.coefficient(i);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& other) const {
  return *this + other * Rational(-1);
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const Rational& scalar) const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c *= scalar;
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit_coeff = mag == 1 && i > 0;
    if (!unit_coeff) out += mag.get_str();
    if (i > 0) {
      if (!unit_coeff) out += "*";
      out += "X";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& dividend,
                                                         const RationalPolynomial& divisor) {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const std::size_t dd = d.size() - 1;
  if (rem.size() < d.size()) return {RationalPolynomial(), dividend};
  std::vector<Rational> quot(rem.size() - dd, Rational(0));
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Rational factor = rem[i] / d[dd];
    quot[i - dd] = factor;
    for (std::size_t k = 0; k <= dd; ++k) rem[i - dd + k] -= factor * d[k];
  }
  rem.resize(dd);
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

}  // namespace lpadic

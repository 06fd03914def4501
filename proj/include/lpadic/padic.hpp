#pragma once

#include <optional>

#include "lpadic/integer.hpp"
#include "lpadic/modarith.hpp"

namespace lpadic {

/// Valuation of a p-adic number. For a zero known only to finite precision
/// the value is a lower bound and `exact` is false.
struct Valuation {
  bool infinite = false;
  bool exact = true;
  long value = 0;

  bool operator==(const Valuation&) const = default;
};

/// An element of Q_p known to finite precision.
///
/// A Finite number is p^valuation * unit with unit a p-adic unit known modulo
/// p^relprec; its absolute precision is valuation + relprec. Two zero states
/// exist: ExactZero (the true zero, additive identity) and
/// PrecisionExhaustedZero (congruent to 0 modulo p^abs_precision, nothing
/// more known). Arithmetic follows interval-style rules:
///  - mul adds valuations and takes the smaller relprec,
///  - add keeps the smaller absolute precision and re-derives the valuation
///    from the surviving digits,
///  - inv negates the valuation and keeps relprec.
class PadicNum {
 public:
  enum class Kind { ExactZero, PrecisionExhaustedZero, Finite };

  static PadicNum exact_zero(const Integer& p);
  static PadicNum exhausted_zero(const Integer& p, long abs_precision);
  /// unit is reduced mod p^relprec and must be coprime to p.
  static PadicNum from_parts(const Integer& p, long valuation, const Integer& unit, long relprec);
  static PadicNum from_rational(const Integer& p, const Rational& q, long relprec);
  static PadicNum from_integer(const Integer& p, const Integer& n, long relprec);
  static PadicNum one(const Integer& p, long relprec) { return from_integer(p, 1, relprec); }

  Kind kind() const { return kind_; }
  const Integer& prime() const { return p_; }
  bool is_exact_zero() const { return kind_ == Kind::ExactZero; }
  bool is_exhausted_zero() const { return kind_ == Kind::PrecisionExhaustedZero; }
  bool is_finite() const { return kind_ == Kind::Finite; }

  /// Valuation of a Finite number; throws otherwise.
  long valuation() const;
  const Integer& unit() const;
  long relprec() const;

  Valuation valuation_of() const;
  /// valuation + relprec; nullopt for ExactZero.
  std::optional<long> absolute_precision() const;

  /// p^-valuation exactly; InsufficientPrecision for an exhausted zero.
  Rational norm() const;
  /// Upper bound on the norm valid in all three states.
  Rational norm_bound() const;

  /// The natural number in [0, p^n) congruent to this (valuation >= 0).
  Integer appr(long n) const;
  Residue to_zmod_pow(long n) const;

  /// Lift p^v * unit to a rational (unit taken in [0, p^relprec)).
  Rational lift() const;

  PadicNum operator+(const PadicNum& other) const;
  PadicNum operator-(const PadicNum& other) const;
  PadicNum operator*(const PadicNum& other) const;
  PadicNum operator/(const PadicNum& other) const;
  PadicNum operator-() const;
  PadicNum& operator+=(const PadicNum& other) { return *this = *this + other; }
  PadicNum& operator*=(const PadicNum& other) { return *this = *this * other; }

  PadicNum inv() const;
  /// Integer power; negative exponents go through inv().
  PadicNum pow(long exponent) const;

  /// Representation equality (same state, digits and precision).
  bool operator==(const PadicNum& other) const;

 private:
  PadicNum(Kind kind, Integer p, long valuation, Integer unit, long relprec);
  void require_same_prime(const PadicNum& other) const;

  Kind kind_ = Kind::ExactZero;
  Integer p_;
  long valuation_ = 0;
  Integer unit_;
  long relprec_ = 0;
};

/// True iff valuation(x - y) >= target. Both operands need absolute
/// precision at least target; otherwise InsufficientPrecision.
bool eq_mod(const PadicNum& x, const PadicNum& y, long target);

std::string to_string(const PadicNum& x);

}  // namespace lpadic

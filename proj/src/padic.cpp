#include "lpadic/padic.hpp"

#include <algorithm>

#include "lpadic/errors.hpp"

namespace lpadic {

namespace {

Integer invert_mod(const Integer& a, const Integer& n) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0) {
    throw NotAUnit(a.get_str() + " is not invertible modulo " + n.get_str());
  }
  return r;
}

Integer power_of(const Integer& p, long e) {
  if (e < 0) throw InvalidArgument("negative exponent for p-power modulus");
  return ipow(p, static_cast<unsigned long>(e));
}

}  // namespace

PadicNum::PadicNum(Kind kind, Integer p, long valuation, Integer unit, long relprec)
    : kind_(kind), p_(std::move(p)), valuation_(valuation), unit_(std::move(unit)), relprec_(relprec) {}

PadicNum PadicNum::exact_zero(const Integer& p) { return PadicNum(Kind::ExactZero, p, 0, 0, 0); }

PadicNum PadicNum::exhausted_zero(const Integer& p, long abs_precision) {
  return PadicNum(Kind::PrecisionExhaustedZero, p, abs_precision, 0, 0);
}

PadicNum PadicNum::from_parts(const Integer& p, long valuation, const Integer& unit, long relprec) {
  if (relprec < 1) throw InvalidArgument("relative precision must be at least 1");
  Integer u = mod(unit, power_of(p, relprec));
  if (u % p == 0) throw InvalidArgument("unit part " + unit.get_str() + " is divisible by p");
  return PadicNum(Kind::Finite, p, valuation, std::move(u), relprec);
}

PadicNum PadicNum::from_rational(const Integer& p, const Rational& q, long relprec) {
  if (q == 0) return exact_zero(p);
  if (relprec < 1) throw InvalidArgument("relative precision must be at least 1");
  Integer num = q.get_num();
  Integer den = q.get_den();
  const long v = remove_factor(num, p) - remove_factor(den, p);
  const Integer modulus = power_of(p, relprec);
  return PadicNum(Kind::Finite, p, v, mod(num * invert_mod(mod(den, modulus), modulus), modulus), relprec);
}

PadicNum PadicNum::from_integer(const Integer& p, const Integer& n, long relprec) {
  return from_rational(p, Rational(n), relprec);
}

long PadicNum::valuation() const {
  if (kind_ != Kind::Finite) throw InvalidArgument("valuation(): number is zero");
  return valuation_;
}

const Integer& PadicNum::unit() const {
  if (kind_ != Kind::Finite) throw InvalidArgument("unit(): number is zero");
  return unit_;
}

long PadicNum::relprec() const {
  if (kind_ != Kind::Finite) throw InvalidArgument("relprec(): number is zero");
  return relprec_;
}

Valuation PadicNum::valuation_of() const {
  switch (kind_) {
    case Kind::ExactZero:
      return {true, true, 0};
    case Kind::PrecisionExhaustedZero:
      return {false, false, valuation_};
    case Kind::Finite:
      break;
  }
  return {false, true, valuation_};
}

std::optional<long> PadicNum::absolute_precision() const {
  switch (kind_) {
    case Kind::ExactZero:
      return std::nullopt;
    case Kind::PrecisionExhaustedZero:
      return valuation_;
    case Kind::Finite:
      break;
  }
  return valuation_ + relprec_;
}

namespace {

Rational p_power_rational(const Integer& p, long e) {
  Rational r = e >= 0 ? Rational(ipow(p, static_cast<unsigned long>(e))) : Rational(1, ipow(p, static_cast<unsigned long>(-e)));
  r.canonicalize();
  return r;
}

}  // namespace

Rational PadicNum::norm() const {
  switch (kind_) {
    case Kind::ExactZero:
      return 0;
    case Kind::PrecisionExhaustedZero:
      throw InsufficientPrecision("norm of a zero known only modulo p^" + std::to_string(valuation_));
    case Kind::Finite:
      break;
  }
  return p_power_rational(p_, -valuation_);
}

Rational PadicNum::norm_bound() const {
  if (kind_ == Kind::PrecisionExhaustedZero) return p_power_rational(p_, -valuation_);
  return norm();
}

Integer PadicNum::appr(long n) const {
  if (n < 0) throw InvalidArgument("appr: n must be nonnegative");
  if (kind_ == Kind::ExactZero) return 0;
  if (kind_ == Kind::PrecisionExhaustedZero) {
    if (n > valuation_) {
      throw InsufficientPrecision("appr: requested " + std::to_string(n) + " digits, zero known to " +
                                  std::to_string(valuation_));
    }
    return 0;
  }
  if (valuation_ < 0) throw InvalidArgument("appr: number is not a p-adic integer");
  if (n > valuation_ + relprec_) {
    throw InsufficientPrecision("appr: requested " + std::to_string(n) + " digits, only " +
                                std::to_string(valuation_ + relprec_) + " known");
  }
  return mod(unit_ * power_of(p_, valuation_), power_of(p_, n));
}

Residue PadicNum::to_zmod_pow(long n) const { return Residue(power_of(p_, n), appr(n)); }

Rational PadicNum::lift() const {
  if (kind_ != Kind::Finite) return 0;
  Rational r = p_power_rational(p_, valuation_) * Rational(unit_);
  r.canonicalize();
  return r;
}

void PadicNum::require_same_prime(const PadicNum& other) const {
  if (p_ != other.p_) {
    throw InvalidArgument("p-adic numbers over different primes: " + p_.get_str() + " and " + other.p_.get_str());
  }
}

PadicNum PadicNum::operator+(const PadicNum& other) const {
  require_same_prime(other);
  if (kind_ == Kind::ExactZero) return other;
  if (other.kind_ == Kind::ExactZero) return *this;

  const long abs = std::min(*absolute_precision(), *other.absolute_precision());
  if (kind_ == Kind::PrecisionExhaustedZero || other.kind_ == Kind::PrecisionExhaustedZero) {
    const PadicNum& rest = kind_ == Kind::Finite ? *this : other;
    if (rest.kind_ != Kind::Finite || rest.valuation_ >= abs) return exhausted_zero(p_, abs);
    const long rp = abs - rest.valuation_;
    return PadicNum(Kind::Finite, p_, rest.valuation_, mod(rest.unit_, power_of(p_, rp)), rp);
  }

  const long v = std::min(valuation_, other.valuation_);
  if (abs <= v) return exhausted_zero(p_, abs);
  const Integer modulus = power_of(p_, abs - v);
  Integer sum = unit_ * power_of(p_, valuation_ - v) + other.unit_ * power_of(p_, other.valuation_ - v);
  sum = mod(sum, modulus);
  if (sum == 0) return exhausted_zero(p_, abs);
  const long shift = remove_factor(sum, p_);
  const long new_v = v + shift;
  return PadicNum(Kind::Finite, p_, new_v, std::move(sum), abs - new_v);
}

PadicNum PadicNum::operator-() const {
  if (kind_ != Kind::Finite) return *this;
  return PadicNum(Kind::Finite, p_, valuation_, mod(-unit_, power_of(p_, relprec_)), relprec_);
}

PadicNum PadicNum::operator-(const PadicNum& other) const { return *this + (-other); }

PadicNum PadicNum::operator*(const PadicNum& other) const {
  require_same_prime(other);
  if (kind_ == Kind::ExactZero || other.kind_ == Kind::ExactZero) return exact_zero(p_);
  if (kind_ == Kind::PrecisionExhaustedZero || other.kind_ == Kind::PrecisionExhaustedZero) {
    // a zero known modulo p^a times something of valuation >= b is zero modulo p^(a+b)
    const long a = kind_ == Kind::PrecisionExhaustedZero ? valuation_ : other.valuation_;
    const PadicNum& rest = kind_ == Kind::PrecisionExhaustedZero ? other : *this;
    return exhausted_zero(p_, a + rest.valuation_);
  }
  const long rp = std::min(relprec_, other.relprec_);
  return PadicNum(Kind::Finite, p_, valuation_ + other.valuation_, mod(unit_ * other.unit_, power_of(p_, rp)), rp);
}

PadicNum PadicNum::inv() const {
  if (kind_ == Kind::ExactZero) throw DivisionByZero("inverse of exact zero");
  if (kind_ == Kind::PrecisionExhaustedZero) {
    throw InsufficientPrecision("inverse of a zero known only modulo p^" + std::to_string(valuation_));
  }
  return PadicNum(Kind::Finite, p_, -valuation_, invert_mod(unit_, power_of(p_, relprec_)), relprec_);
}

PadicNum PadicNum::operator/(const PadicNum& other) const { return *this * other.inv(); }

PadicNum PadicNum::pow(long exponent) const {
  if (exponent < 0) return inv().pow(-exponent);
  if (kind_ == Kind::Finite) {
    const Integer modulus = power_of(p_, relprec_);
    Integer u;
    mpz_powm_ui(u.get_mpz_t(), unit_.get_mpz_t(), static_cast<unsigned long>(exponent), modulus.get_mpz_t());
    return PadicNum(Kind::Finite, p_, valuation_ * exponent, std::move(u), relprec_);
  }
  if (exponent == 0) throw InvalidArgument("0^0 is not defined for p-adic zeros");
  if (kind_ == Kind::ExactZero) return *this;
  return exhausted_zero(p_, valuation_ * exponent);
}

bool PadicNum::operator==(const PadicNum& other) const {
  if (kind_ != other.kind_ || p_ != other.p_) return false;
  switch (kind_) {
    case Kind::ExactZero:
      return true;
    case Kind::PrecisionExhaustedZero:
      return valuation_ == other.valuation_;
    case Kind::Finite:
      break;
  }
  return valuation_ == other.valuation_ && relprec_ == other.relprec_ && unit_ == other.unit_;
}

bool eq_mod(const PadicNum& x, const PadicNum& y, long target) {
  for (const PadicNum* operand : {&x, &y}) {
    const auto abs = operand->absolute_precision();
    if (abs && *abs < target) {
      throw InsufficientPrecision("eq_mod: operand known to p^" + std::to_string(*abs) + ", target " +
                                  std::to_string(target));
    }
  }
  const PadicNum diff = x - y;
  const Valuation v = diff.valuation_of();
  return v.infinite || v.value >= target;
}

std::string to_string(const PadicNum& x) {
  const std::string p = x.prime().get_str();
  switch (x.kind()) {
    case PadicNum::Kind::ExactZero:
      return "0";
    case PadicNum::Kind::PrecisionExhaustedZero:
      return "O(" + p + "^" + std::to_string(x.valuation_of().value) + ")";
    case PadicNum::Kind::Finite:
      break;
  }
  return p + "^" + std::to_string(x.valuation()) + "*" + x.unit().get_str() + " + O(" + p + "^" +
         std::to_string(*x.absolute_precision()) + ")";
}

}  // namespace lpadic

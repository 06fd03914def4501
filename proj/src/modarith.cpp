#include "lpadic/modarith.hpp"

#include "lpadic/errors.hpp"

namespace lpadic {

namespace {

Integer powmod(const Integer& base, const Integer& exponent, const Integer& modulus) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

}  // namespace

Residue::Residue(const Integer& modulus, const Integer& x) : modulus_(modulus) {
  if (modulus < 1) throw InvalidArgument("modulus must be a positive integer");
  value_ = mod(x, modulus_);
}

void Residue::require_same_modulus(const Residue& other) const {
  if (modulus_ != other.modulus_) {
    throw InvalidArgument("residues mod " + modulus_.get_str() + " and mod " +
                          other.modulus_.get_str() + " cannot be combined");
  }
}

Residue Residue::operator+(const Residue& other) const {
  require_same_modulus(other);
  return Residue(modulus_, value_ + other.value_);
}

Residue Residue::operator-(const Residue& other) const {
  require_same_modulus(other);
  return Residue(modulus_, value_ - other.value_);
}

Residue Residue::operator*(const Residue& other) const {
  require_same_modulus(other);
  return Residue(modulus_, value_ * other.value_);
}

Residue Residue::operator-() const { return Residue(modulus_, -value_); }

bool Residue::is_unit() const { return gcd(value_, modulus_) == 1; }

UnitResidue::UnitResidue(Residue residue) : residue_(std::move(residue)) {
  if (!residue_.is_unit()) {
    throw NotAUnit(residue_.value().get_str() + " is not a unit modulo " +
                   residue_.modulus().get_str());
  }
}

UnitResidue UnitResidue::operator*(const UnitResidue& other) const {
  return UnitResidue(residue_ * other.residue_);
}

UnitResidue UnitResidue::inverse() const { return inverse_mod(value(), modulus()); }

Residue reduce(const Integer& n, const Integer& x) {
  if (n < 1) throw InvalidArgument("reduce: modulus must be at least 1");
  return Residue(n, x);
}

UnitResidue inverse_mod(const Integer& c, const Integer& n) {
  if (n < 1) throw InvalidArgument("inverse_mod: modulus must be at least 1");
  if (n == 1) return UnitResidue(Residue(n, 0));
  Integer inv;
  Integer c_red = mod(c, n);
  if (mpz_invert(inv.get_mpz_t(), c_red.get_mpz_t(), n.get_mpz_t()) == 0) {
    throw NotAUnit(c.get_str() + " is not invertible modulo " + n.get_str());
  }
  return UnitResidue(Residue(n, inv));
}

std::pair<Residue, Residue> crt_split(const Integer& d, const Integer& q, const Residue& x) {
  if (d < 1 || q < 1) throw InvalidArgument("crt_split: moduli must be positive");
  if (gcd(d, q) != 1) throw NotCoprime("crt_split: gcd(" + d.get_str() + ", " + q.get_str() + ") != 1");
  if (x.modulus() != d * q) {
    throw InvalidArgument("crt_split: residue is mod " + x.modulus().get_str() + ", expected mod " +
                          Integer(d * q).get_str());
  }
  return {Residue(d, x.value()), Residue(q, x.value())};
}

Residue crt_combine(const Integer& d, const Integer& q, const Residue& a, const Residue& b) {
  if (d < 1 || q < 1) throw InvalidArgument("crt_combine: moduli must be positive");
  if (gcd(d, q) != 1) throw NotCoprime("crt_combine: gcd(" + d.get_str() + ", " + q.get_str() + ") != 1");
  if (a.modulus() != d || b.modulus() != q) throw InvalidArgument("crt_combine: residue moduli do not match");
  // x = a + d * ((b - a) * d^{-1} mod q)
  const Integer d_inv = inverse_mod(d, q).value();
  const Integer t = mod((b.value() - a.value()) * d_inv, q);
  return Residue(d * q, a.value() + d * t);
}

std::vector<UnitResidue> units_of(const Integer& n) {
  if (n < 1) throw InvalidArgument("units_of: modulus must be at least 1");
  std::vector<UnitResidue> out;
  if (n == 1) {
    out.emplace_back(Residue(n, 0));
    return out;
  }
  for (Integer a = 1; a < n; ++a) {
    if (gcd(a, n) == 1) out.emplace_back(Residue(n, a));
  }
  return out;
}

RangePartition partition_range(const Integer& d, const Integer& p, unsigned long x) {
  if (d < 1) throw InvalidArgument("partition_range: d must be positive");
  if (!is_prime(p)) throw InvalidArgument("partition_range: p must be prime");
  if (gcd(d, p) != 1) throw NotCoprime("partition_range: gcd(d, p) != 1");
  const Integer bound = d * ipow(p, x);
  const Integer dp = d * p;
  RangePartition out;
  for (Integer a = 0; a < bound; ++a) {
    if (gcd(a, dp) == 1) {
      out.units.push_back(a);
    } else {
      out.nonunits.push_back(a);
    }
  }
  return out;
}

Integer multiplicative_order(const Integer& a, const Integer& n) {
  if (gcd(a, n) != 1) throw NotAUnit("multiplicative_order: " + a.get_str() + " is not a unit mod " + n.get_str());
  if (n == 1) return 1;
  Integer order = euler_phi(n);
  for (const auto& [r, e] : factorize(order)) {
    for (unsigned long i = 0; i < e; ++i) {
      if (powmod(a, order / r, n) != 1) break;
      order /= r;
    }
  }
  return order;
}

Integer primitive_root(const Integer& prime, unsigned long exponent) {
  if (prime < 3 || !is_prime(prime)) throw InvalidArgument("primitive_root: modulus must be an odd prime power");
  if (exponent < 1) throw InvalidArgument("primitive_root: exponent must be positive");
  const Integer n = ipow(prime, exponent);
  const Integer phi = euler_phi(n);
  const auto factors = factorize(phi);
  for (Integer g = 2;; ++g) {
    if (g % prime == 0) continue;
    bool primitive = true;
    for (const auto& [r, e] : factors) {
      if (powmod(g, phi / r, n) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
}

std::vector<CyclicFactor> unit_group_structure(const Integer& n) {
  if (n < 1) throw InvalidArgument("unit_group_structure: modulus must be positive");
  std::vector<CyclicFactor> out;
  for (const auto& [q, e] : factorize(n)) {
    const Integer qe = ipow(q, e);
    const Integer rest = n / qe;
    auto lift = [&](const Integer& g) {
      return crt_combine(qe, rest, Residue(qe, g), Residue(rest, 1)).value();
    };
    if (q == 2) {
      if (e >= 2) out.push_back({lift(qe - 1), Integer(2)});
      if (e >= 3) out.push_back({lift(5), ipow(2, e - 2)});
    } else {
      out.push_back({lift(primitive_root(q, e)), euler_phi(qe)});
    }
  }
  return out;
}

}  // namespace lpadic

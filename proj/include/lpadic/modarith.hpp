#pragma once

#include <vector>

#include "lpadic/integer.hpp"

namespace lpadic {

/// An element of Z/nZ held by its least nonnegative representative.
class Residue {
 public:
  /// Reduces x modulo n; n must be positive.
  Residue(const Integer& modulus, const Integer& x);

  const Integer& modulus() const { return modulus_; }
  const Integer& value() const { return value_; }

  Residue operator+(const Residue& other) const;
  Residue operator-(const Residue& other) const;
  Residue operator*(const Residue& other) const;
  Residue operator-() const;

  bool operator==(const Residue& other) const {
    return modulus_ == other.modulus_ && value_ == other.value_;
  }

  bool is_unit() const;

 private:
  void require_same_modulus(const Residue& other) const;

  Integer modulus_;
  Integer value_;
};

/// A residue certified coprime to its modulus. Z/1Z has the single unit 0.
class UnitResidue {
 public:
  /// Throws NotAUnit when gcd(value, modulus) != 1.
  explicit UnitResidue(Residue residue);

  const Residue& residue() const { return residue_; }
  const Integer& value() const { return residue_.value(); }
  const Integer& modulus() const { return residue_.modulus(); }

  UnitResidue operator*(const UnitResidue& other) const;
  UnitResidue inverse() const;

  bool operator==(const UnitResidue& other) const { return residue_ == other.residue_; }

 private:
  Residue residue_;
};

Residue reduce(const Integer& n, const Integer& x);

/// b with c*b = 1 (mod n); NotAUnit when gcd(c, n) != 1.
UnitResidue inverse_mod(const Integer& c, const Integer& n);

/// Z/(dq) -> Z/d x Z/q for coprime d, q.
std::pair<Residue, Residue> crt_split(const Integer& d, const Integer& q, const Residue& x);

/// Inverse of crt_split.
Residue crt_combine(const Integer& d, const Integer& q, const Residue& a, const Residue& b);

/// Units of Z/nZ in increasing representative order.
std::vector<UnitResidue> units_of(const Integer& n);

struct RangePartition {
  std::vector<Integer> units;
  std::vector<Integer> nonunits;
};

/// Splits [0, d p^x) by coprimality with d p.
RangePartition partition_range(const Integer& d, const Integer& p, unsigned long x);

/// One cyclic factor <generator> of (Z/nZ)^x with its order.
struct CyclicFactor {
  Integer generator;
  Integer order;
};

/// Decomposes (Z/nZ)^x as a direct product of cyclic groups, one or two per
/// prime power of n. The product of the orders is phi(n); empty for n <= 2.
std::vector<CyclicFactor> unit_group_structure(const Integer& n);

/// Least primitive root modulo an odd prime power.
Integer primitive_root(const Integer& prime, unsigned long exponent = 1);

Integer multiplicative_order(const Integer& a, const Integer& n);

}  // namespace lpadic

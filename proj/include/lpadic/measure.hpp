#pragma once

#include <random>
#include <utility>
#include <vector>

#include "lpadic/modarith.hpp"
#include "lpadic/padic.hpp"

namespace lpadic {

/// Parameters of the Bernoulli measure E_c on Z/dZ x Z_p: p an odd prime,
/// d >= 1 coprime to p, c >= 2 coprime to d p.
class BernoulliParams {
 public:
  BernoulliParams(const Integer& p, const Integer& d, const Integer& c);

  const Integer& p() const { return p_; }
  const Integer& d() const { return d_; }
  const Integer& c() const { return c_; }
  /// d p^level, the size of the level-th finite quotient.
  Integer modulus(unsigned long level) const;

 private:
  Integer p_;
  Integer d_;
  Integer c_;
};

/// U_{n,a}: the preimage of a under Z/dZ x Z_p -> Z/(d p^n)Z.
struct ClopenSet {
  Integer d;
  Integer p;
  unsigned long level;
  Residue base;

  ClopenSet(const Integer& d, const Integer& p, unsigned long level, const Integer& base);
};

/// A locally constant function on Z/dZ x Z_p, given by its values on
/// Z/(d p^level)Z.
class CylinderFunction {
 public:
  CylinderFunction(const Integer& d, const Integer& p, unsigned long level, std::vector<PadicNum> values);

  static CylinderFunction constant(const Integer& d, const Integer& p, unsigned long level, const PadicNum& value);

  const Integer& d() const { return d_; }
  const Integer& p() const { return p_; }
  unsigned long level() const { return level_; }
  Integer modulus() const;
  const std::vector<PadicNum>& values() const { return values_; }
  /// Value at any integer representative.
  const PadicNum& value_at(const Integer& a) const;

  /// Pointwise sum; both functions must share d, p and level.
  CylinderFunction operator+(const CylinderFunction& other) const;
  CylinderFunction scaled(const PadicNum& factor) const;

  bool operator==(const CylinderFunction& other) const {
    return d_ == other.d_ && p_ == other.p_ && level_ == other.level_ && values_ == other.values_;
  }

 private:
  Integer d_;
  Integer p_;
  unsigned long level_;
  std::vector<PadicNum> values_;
};

CylinderFunction char_fn(const ClopenSet& set, long relprec);

/// The pairs (f(a), U_{level,a}) over every residue a.
std::vector<std::pair<PadicNum, ClopenSet>> cylinder_decompose(const CylinderFunction& f);

/// The same function on the finer quotient at new_level >= level.
CylinderFunction refine_level(const CylinderFunction& f, unsigned long new_level);

/// Residues b mod d p^m with b = a mod d p^n, ascending.
std::vector<Residue> equi_class(const Integer& d, const Integer& p, unsigned long n, unsigned long m, const Residue& a);

enum class DistributionVariant {
  /// {A/D} - c {(c^{-1} A mod D)/D} + (c-1)/2 with c^{-1} an integer inverse mod D.
  IntegerInverse,
  /// {A/D} - c {A/(c D)} + (c-1)/2; diagnostic only, not a distribution.
  RationalDivision,
};

/// E_c(U_{n,a}) with D = d p^n and A the least representative of a.
Rational bernoulli_distribution(const BernoulliParams& params, unsigned long n, const Residue& a,
                                DistributionVariant variant = DistributionVariant::IntegerInverse);

/// Sum of E_c over equi_class(m, m+1, x); equals E_c(m, x) for a distribution.
Rational distribution_refine_sum(const BernoulliParams& params, unsigned long m, const Residue& x,
                                 DistributionVariant variant = DistributionVariant::IntegerInverse);

/// sum_a f(a) E_c(level, a), weights embedded in Q_p at relprec.
PadicNum measure_apply(const BernoulliParams& params, const CylinderFunction& f, long relprec);

/// Keeps f on residues coprime to d p and sets it to zero elsewhere.
CylinderFunction extend_by_zero(const CylinderFunction& f);

/// K = 1 + |c|_p + |(c-1)/2|_p.
Rational measure_bound_constant(const BernoulliParams& params);

struct NormBoundCheck {
  Rational lhs;
  Rational rhs;
  bool ok = false;
};

/// |E_c(f)|_p against K sup_a |f(a)|_p, both as exact rationals.
NormBoundCheck norm_bound_check(const BernoulliParams& params, const CylinderFunction& f, long relprec);

struct CompatibilityFailure {
  unsigned long level;
  Integer x;
  Rational coarse;
  Rational refined;
};

/// Checks distribution_refine_sum against the coarse value for every level
/// m <= max_level and every x mod d p^m.
std::vector<CompatibilityFailure> compatibility_sweep(const BernoulliParams& params, unsigned long max_level,
                                                      DistributionVariant variant = DistributionVariant::IntegerInverse);

/// Random cylinder function: mostly units and p-multiples, some rationals
/// with p in the denominator, some exact zeros.
CylinderFunction random_cylinder(const Integer& d, const Integer& p, unsigned long level, long relprec,
                                 std::mt19937_64& rng);

struct BoundednessFailure {
  unsigned long level;
  Rational lhs;
  Rational rhs;
};

std::vector<BoundednessFailure> boundedness_sweep(const BernoulliParams& params, unsigned long max_level,
                                                  std::size_t samples, long relprec, std::mt19937_64& rng);

}  // namespace lpadic

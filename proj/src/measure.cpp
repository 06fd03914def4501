#include "lpadic/measure.hpp"

#include <algorithm>

#include "lpadic/errors.hpp"

namespace lpadic {

BernoulliParams::BernoulliParams(const Integer& p, const Integer& d, const Integer& c) : p_(p), d_(d), c_(c) {
  if (p < 3 || !is_prime(p)) throw PreconditionViolation("p must be an odd prime");
  if (d < 1) throw PreconditionViolation("d must be positive");
  if (gcd(d, p) != 1) throw PreconditionViolation("gcd(d, p) must be 1");
  if (c < 2) throw PreconditionViolation("c must be at least 2");
  if (gcd(c, d * p) != 1) throw PreconditionViolation("gcd(c, d p) must be 1");
}

Integer BernoulliParams::modulus(unsigned long level) const { return d_ * ipow(p_, level); }

ClopenSet::ClopenSet(const Integer& d_in, const Integer& p_in, unsigned long level_in, const Integer& base_in)
    : d(d_in), p(p_in), level(level_in), base(d_in * ipow(p_in, level_in), base_in) {}

CylinderFunction::CylinderFunction(const Integer& d, const Integer& p, unsigned long level,
                                   std::vector<PadicNum> values)
    : d_(d), p_(p), level_(level), values_(std::move(values)) {
  if (d < 1) throw InvalidArgument("cylinder function: d must be positive");
  const Integer n = modulus();
  if (!n.fits_ulong_p() || values_.size() != n.get_ui()) {
    throw InvalidArgument("cylinder function at level " + std::to_string(level) + " needs " + n.get_str() +
                          " values, got " + std::to_string(values_.size()));
  }
  for (const auto& v : values_) {
    if (v.prime() != p) throw InvalidArgument("cylinder function value over the wrong prime");
  }
}

CylinderFunction CylinderFunction::constant(const Integer& d, const Integer& p, unsigned long level,
                                            const PadicNum& value) {
  return CylinderFunction(d, p, level, std::vector<PadicNum>(to_ulong(d * ipow(p, level)), value));
}

Integer CylinderFunction::modulus() const { return d_ * ipow(p_, level_); }

const PadicNum& CylinderFunction::value_at(const Integer& a) const { return values_[mod(a, modulus()).get_ui()]; }

CylinderFunction CylinderFunction::operator+(const CylinderFunction& other) const {
  if (d_ != other.d_ || p_ != other.p_ || level_ != other.level_) {
    throw InvalidArgument("cylinder functions on different quotients");
  }
  std::vector<PadicNum> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out.push_back(values_[i] + other.values_[i]);
  return CylinderFunction(d_, p_, level_, std::move(out));
}

CylinderFunction CylinderFunction::scaled(const PadicNum& factor) const {
  std::vector<PadicNum> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v * factor);
  return CylinderFunction(d_, p_, level_, std::move(out));
}

CylinderFunction char_fn(const ClopenSet& set, long relprec) {
  std::vector<PadicNum> values(to_ulong(set.base.modulus()), PadicNum::exact_zero(set.p));
  values[set.base.value().get_ui()] = PadicNum::one(set.p, relprec);
  return CylinderFunction(set.d, set.p, set.level, std::move(values));
}

std::vector<std::pair<PadicNum, ClopenSet>> cylinder_decompose(const CylinderFunction& f) {
  std::vector<std::pair<PadicNum, ClopenSet>> out;
  out.reserve(f.values().size());
  for (std::size_t a = 0; a < f.values().size(); ++a) {
    out.emplace_back(f.values()[a], ClopenSet(f.d(), f.p(), f.level(), Integer(a)));
  }
  return out;
}

CylinderFunction refine_level(const CylinderFunction& f, unsigned long new_level) {
  if (new_level < f.level()) {
    throw LevelOrder("refine_level: target level " + std::to_string(new_level) + " is below " +
                     std::to_string(f.level()));
  }
  const unsigned long n = to_ulong(f.d() * ipow(f.p(), new_level));
  std::vector<PadicNum> values;
  values.reserve(n);
  for (unsigned long a = 0; a < n; ++a) values.push_back(f.value_at(a));
  return CylinderFunction(f.d(), f.p(), new_level, std::move(values));
}

std::vector<Residue> equi_class(const Integer& d, const Integer& p, unsigned long n, unsigned long m,
                                const Residue& a) {
  if (m < n) throw LevelOrder("equi_class: level " + std::to_string(m) + " is below " + std::to_string(n));
  const Integer coarse = d * ipow(p, n);
  if (a.modulus() != coarse) throw InvalidArgument("equi_class: residue is not mod d p^n");
  const Integer fine = d * ipow(p, m);
  const Integer count = ipow(p, m - n);
  std::vector<Residue> out;
  for (Integer t = 0; t < count; ++t) out.emplace_back(fine, a.value() + t * coarse);
  return out;
}

Rational bernoulli_distribution(const BernoulliParams& params, unsigned long n, const Residue& a,
                                DistributionVariant variant) {
  const Integer big_d = params.modulus(n);
  if (a.modulus() != big_d) {
    throw InvalidArgument("bernoulli_distribution: residue is mod " + a.modulus().get_str() + ", expected mod " +
                          big_d.get_str());
  }
  const Integer& c = params.c();
  const Integer& big_a = a.value();
  Rational second;
  if (variant == DistributionVariant::IntegerInverse) {
    const Integer c_inv = inverse_mod(c, big_d).value();
    second = fract(Rational(mod(c_inv * big_a, big_d), big_d));
  } else {
    second = fract(Rational(big_a, c * big_d));
  }
  Rational out = fract(Rational(big_a, big_d)) - Rational(c) * second + Rational(c - 1, 2);
  out.canonicalize();
  return out;
}

Rational distribution_refine_sum(const BernoulliParams& params, unsigned long m, const Residue& x,
                                 DistributionVariant variant) {
  Rational sum = 0;
  for (const Residue& y : equi_class(params.d(), params.p(), m, m + 1, x)) {
    sum += bernoulli_distribution(params, m + 1, y, variant);
  }
  sum.canonicalize();
  return sum;
}

PadicNum measure_apply(const BernoulliParams& params, const CylinderFunction& f, long relprec) {
  if (f.d() != params.d() || f.p() != params.p()) throw InvalidArgument("measure_apply: function on another space");
  const Integer modulus = f.modulus();
  PadicNum acc = PadicNum::exact_zero(params.p());
  for (std::size_t a = 0; a < f.values().size(); ++a) {
    const PadicNum& v = f.values()[a];
    if (v.is_exact_zero()) continue;
    const Rational weight = bernoulli_distribution(params, f.level(), Residue(modulus, Integer(a)));
    acc += v * PadicNum::from_rational(params.p(), weight, relprec);
  }
  return acc;
}

CylinderFunction extend_by_zero(const CylinderFunction& f) {
  const Integer dp = f.d() * f.p();
  std::vector<PadicNum> values = f.values();
  for (std::size_t a = 0; a < values.size(); ++a) {
    if (gcd(Integer(a), dp) != 1) values[a] = PadicNum::exact_zero(f.p());
  }
  return CylinderFunction(f.d(), f.p(), f.level(), std::move(values));
}

Rational measure_bound_constant(const BernoulliParams& params) {
  const Integer& p = params.p();
  const Rational c(params.c());
  Rational half(params.c() - 1, 2);
  half.canonicalize();
  const long rp = 1;  // norms depend only on valuations
  Rational k = 1 + PadicNum::from_rational(p, c, rp).norm() + PadicNum::from_rational(p, half, rp).norm();
  k.canonicalize();
  return k;
}

NormBoundCheck norm_bound_check(const BernoulliParams& params, const CylinderFunction& f, long relprec) {
  NormBoundCheck out;
  out.lhs = measure_apply(params, f, relprec).norm_bound();
  Rational sup = 0;
  for (const auto& v : f.values()) sup = std::max(sup, v.norm_bound());
  out.rhs = measure_bound_constant(params) * sup;
  out.rhs.canonicalize();
  out.ok = out.lhs <= out.rhs;
  return out;
}

std::vector<CompatibilityFailure> compatibility_sweep(const BernoulliParams& params, unsigned long max_level,
                                                      DistributionVariant variant) {
  std::vector<CompatibilityFailure> failures;
  for (unsigned long m = 0; m <= max_level; ++m) {
    const Integer modulus = params.modulus(m);
    for (Integer x = 0; x < modulus; ++x) {
      const Residue r(modulus, x);
      const Rational coarse = bernoulli_distribution(params, m, r, variant);
      const Rational refined = distribution_refine_sum(params, m, r, variant);
      if (coarse != refined) failures.push_back({m, x, coarse, refined});
    }
  }
  return failures;
}

CylinderFunction random_cylinder(const Integer& d, const Integer& p, unsigned long level, long relprec,
                                 std::mt19937_64& rng) {
  const unsigned long n = to_ulong(d * ipow(p, level));
  const long span = 1'000'000;
  std::uniform_int_distribution<int> kind(0, 7);
  std::uniform_int_distribution<long> numerator(-span, span);
  std::uniform_int_distribution<unsigned long> denominator_power(1, 2);
  std::vector<PadicNum> values;
  values.reserve(n);
  for (unsigned long a = 0; a < n; ++a) {
    const int k = kind(rng);
    if (k == 0) {
      values.push_back(PadicNum::exact_zero(p));
    } else if (k == 1) {
      Rational q(Integer(numerator(rng)), ipow(p, denominator_power(rng)));
      q.canonicalize();
      values.push_back(PadicNum::from_rational(p, q, relprec));
    } else {
      values.push_back(PadicNum::from_integer(p, numerator(rng), relprec));
    }
  }
  return CylinderFunction(d, p, level, std::move(values));
}

std::vector<BoundednessFailure> boundedness_sweep(const BernoulliParams& params, unsigned long max_level,
                                                  std::size_t samples, long relprec, std::mt19937_64& rng) {
  std::vector<BoundednessFailure> failures;
  std::uniform_int_distribution<unsigned long> level_pick(0, max_level);
  for (std::size_t i = 0; i < samples; ++i) {
    const unsigned long level = level_pick(rng);
    const CylinderFunction f = random_cylinder(params.d(), params.p(), level, relprec, rng);
    const NormBoundCheck check = norm_bound_check(params, f, relprec);
    if (!check.ok) failures.push_back({level, check.lhs, check.rhs});
  }
  return failures;
}

}  // namespace lpadic

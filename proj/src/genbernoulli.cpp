#include "lpadic/genbernoulli.hpp"

#include "lpadic/bernoulli.hpp"
#include "lpadic/errors.hpp"

namespace lpadic {

namespace {

// F^{m-1} sum_{a=1}^{F} psi(a) B_m(a/F) with psi read mod its own level,
// which divides F.
CyclotomicNumber bernoulli_character_sum(const DirichletCharacter& psi, unsigned long m, const Integer& big_f) {
  const RationalPolynomial bm = bernoulli_poly(m);
  std::vector<Rational> by_exponent(psi.order(), Rational(0));
  for (Integer a = 1; a <= big_f; ++a) {
    const auto e = psi.exponent_at(a);
    if (!e) continue;
    by_exponent[static_cast<std::size_t>(*e)] += bm.eval(Rational(a, big_f));
  }
  Rational scale = m >= 1 ? Rational(ipow(big_f, m - 1)) : Rational(1, big_f);
  scale.canonicalize();
  return CyclotomicNumber::from_power_coefficients(psi.order(), by_exponent) * scale;
}

PadicNum embed(const CyclotomicNumber& x, const DirichletCharacter& chi) {
  return x.embed(chi.roots().zeta(), chi.relprec());
}

}  // namespace

CyclotomicNumber general_bernoulli_exact(const DirichletCharacter& chi, unsigned long m) {
  const DirichletCharacter primitive = asso_primitive(chi);
  return bernoulli_character_sum(primitive, m, primitive.level());
}

CyclotomicNumber general_bernoulli_via_multiple_exact(const DirichletCharacter& chi, unsigned long m,
                                                      const Integer& multiple) {
  const DirichletCharacter primitive = asso_primitive(chi);
  if (multiple < 1 || multiple % primitive.level() != 0) {
    throw NotMultipleOfConductor(multiple.get_str() + " is not a positive multiple of the conductor " +
                                 primitive.level().get_str());
  }
  return bernoulli_character_sum(primitive, m, multiple);
}

PadicNum general_bernoulli(const DirichletCharacter& chi, unsigned long m) {
  return embed(general_bernoulli_exact(chi, m), chi);
}

PadicNum general_bernoulli_via_multiple(const DirichletCharacter& chi, unsigned long m, const Integer& multiple) {
  return embed(general_bernoulli_via_multiple_exact(chi, m, multiple), chi);
}

DirichletCharacter twist_by_omega_inverse(const DirichletCharacter& chi, long k) {
  const long order = static_cast<long>(chi.order());
  const long exponent = ((order - k % order) % order + order) % order;
  return mul(chi, omega_power(chi.prime(), exponent, chi.relprec()));
}

unsigned long check_even_character_setup(const DirichletCharacter& chi, const Integer& d) {
  const Integer& p = chi.prime();
  if (d < 1) throw PreconditionViolation("d must be positive");
  if (gcd(d, p) != 1) throw PreconditionViolation("gcd(d, p) must be 1");
  if (chi.level() % d != 0) throw PreconditionViolation("d must divide the level of chi");
  Integer rest = chi.level() / d;
  unsigned long m = 0;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1 || m < 1) {
    throw PreconditionViolation("chi must have level d * p^m with m >= 1 (level " + chi.level().get_str() +
                                ", d = " + d.get_str() + ")");
  }
  if (parity(chi) != Parity::Even) throw PreconditionViolation("chi must be even");
  return m;
}

namespace {

void check_sum_level(unsigned long m, unsigned long j) {
  if (j < m) {
    throw LevelTooLow("summation level " + std::to_string(j) + " is below the character exponent " + std::to_string(m));
  }
}

// sum over units a mod d p^j of psi(a) a^power, as an exact p-adic sum.
PadicNum unit_power_sum(const DirichletCharacter& psi, const Integer& d, unsigned long j, unsigned long power) {
  const Integer& p = psi.prime();
  const long prec = psi.relprec();
  const Integer modulus = d * ipow(p, j);
  const Integer dp = d * p;
  PadicNum acc = PadicNum::exact_zero(p);
  for (Integer a = 1; a < modulus; ++a) {
    if (gcd(a, dp) != 1) continue;
    const auto e = psi.exponent_at(a);
    if (!e) continue;
    acc += psi.roots().root(*e) * PadicNum::from_integer(p, ipow(a, power), prec);
  }
  return acc;
}

}  // namespace

PadicNum even_character_truncation(const DirichletCharacter& chi, const Integer& d, unsigned long k, unsigned long j) {
  const unsigned long m = check_even_character_setup(chi, d);
  if (k < 1) throw PreconditionViolation("k must be at least 1");
  check_sum_level(m, j);
  const Integer& p = chi.prime();
  if (chi.relprec() <= static_cast<long>(j)) {
    throw InsufficientPrecision("dividing by d p^" + std::to_string(j) + " needs precision above " + std::to_string(j));
  }
  const DirichletCharacter psi = twist_by_omega_inverse(chi, static_cast<long>(k));
  const PadicNum sum = unit_power_sum(psi, d, j, k);
  return sum / PadicNum::from_integer(p, d * ipow(p, j), chi.relprec());
}

PadicNum even_character_limit(const DirichletCharacter& chi, const Integer& d, unsigned long k) {
  check_even_character_setup(chi, d);
  if (k < 1) throw PreconditionViolation("k must be at least 1");
  const Integer& p = chi.prime();
  const long prec = chi.relprec();
  const DirichletCharacter psi = twist_by_omega_inverse(chi, static_cast<long>(k));
  const PadicNum euler = PadicNum::one(p, prec) - psi.value_at(p) * PadicNum::from_integer(p, ipow(p, k - 1), prec);
  return euler * general_bernoulli(psi, k);
}

PadicNum unit_character_sum(const DirichletCharacter& chi, const Integer& d, unsigned long k, unsigned long j) {
  const unsigned long m = check_even_character_setup(chi, d);
  if (k < 1) throw PreconditionViolation("k must be at least 1");
  check_sum_level(m, j);
  return unit_power_sum(twist_by_omega_inverse(chi, static_cast<long>(k)), d, j, k - 1);
}

}  // namespace lpadic

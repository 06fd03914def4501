#include <doctest.h>

#include "lpadic/bernoulli.hpp"
#include "lpadic/errors.hpp"
#include "lpadic/genbernoulli.hpp"

using namespace lpadic;

namespace {

// B_{n,chi} = sum_k C(n,k) B_k f^{k-1} sum_{a=1}^{f} chi(a) a^{n-k}, from
// expanding B_n(a/f); grouped by character exponent.
CyclotomicNumber power_sum_oracle(const DirichletCharacter& chi, unsigned long n) {
  const DirichletCharacter primitive = asso_primitive(chi);
  const Integer f = primitive.level();
  std::vector<Rational> by_exponent(chi.order(), Rational(0));
  for (Integer a = 1; a <= f; ++a) {
    const auto e = primitive.exponent_at(a);
    if (!e) continue;
    for (unsigned long k = 0; k <= n; ++k) {
      Rational term = Rational(binomial(n, k)) * bernoulli(k) * Rational(ipow(a, n - k));
      term *= k >= 1 ? Rational(ipow(f, k - 1)) : Rational(1, f);
      by_exponent[*e] += term;
    }
  }
  for (auto& q : by_exponent) q.canonicalize();
  return CyclotomicNumber::from_power_coefficients(chi.order(), by_exponent);
}

std::vector<DirichletCharacter> test_characters() {
  std::vector<DirichletCharacter> out;
  for (long p : {3, 5, 7}) {
    const auto roots = TeichmullerTable::get(p, 6);
    for (long level = 1; level <= 24; ++level) {
      for (const auto& chi : all_characters(roots, level)) out.push_back(chi);
    }
  }
  return out;
}

Rational rational(const CyclotomicNumber& x) {
  REQUIRE(x.is_rational());
  return x.rational_value();
}

}  // namespace

TEST_CASE("small values") {
  const DirichletCharacter triv = DirichletCharacter::trivial(TeichmullerTable::get(5, 6), 1);
  CHECK(rational(general_bernoulli_exact(triv, 2)) == Rational(1, 6));
  CHECK(rational(general_bernoulli_exact(triv, 1)) == Rational(1, 2));
  CHECK(general_bernoulli(triv, 2) == PadicNum::from_rational(5, Rational(1, 6), 6));
  for (unsigned long m = 2; m <= 12; ++m) CHECK(rational(general_bernoulli_exact(triv, m)) == bernoulli(m));

  const DirichletCharacter chi3 = omega_power(3, 1, 6);
  CHECK(rational(general_bernoulli_exact(chi3, 1)) == Rational(-1, 3));
  CHECK(rational(general_bernoulli_via_multiple_exact(chi3, 1, 3)) == Rational(-1, 3));
  CHECK(rational(general_bernoulli_via_multiple_exact(chi3, 1, 6)) == Rational(-1, 3));
  CHECK(rational(general_bernoulli_via_multiple_exact(triv, 2, 2)) == Rational(1, 6));
  CHECK_THROWS_AS(general_bernoulli_via_multiple_exact(chi3, 1, 4), NotMultipleOfConductor);

  // the quadratic character mod 5
  const DirichletCharacter chi5 = omega_power(5, 2, 6);
  CHECK(rational(general_bernoulli_exact(chi5, 2)) == Rational(4, 5));
  CHECK(rational(general_bernoulli_exact(chi5, 4)) == Rational(-8));
}

TEST_CASE("agreement with the power-sum expansion") {
  for (const auto& chi : test_characters()) {
    for (unsigned long m = 0; m <= 6; ++m) CHECK(general_bernoulli_exact(chi, m) == power_sum_oracle(chi, m));
  }
}

TEST_CASE("F-independence") {
  for (const auto& chi : test_characters()) {
    const Integer f = conductor(chi);
    for (unsigned long m = 0; m <= 6; ++m) {
      const CyclotomicNumber base = general_bernoulli_exact(chi, m);
      for (int t : {1, 2, 3}) CHECK(general_bernoulli_via_multiple_exact(chi, m, f * t) == base);
    }
  }
}

TEST_CASE("parity vanishing") {
  std::vector<DirichletCharacter> chars{omega_power(3, 1, 6)};
  for (long k = 1; k < 4; ++k) chars.push_back(omega_power(5, k, 6));
  for (const auto& chi : chars) {
    const bool even = parity(chi) == Parity::Even;
    for (unsigned long m = 0; m <= 6; ++m) {
      if (even != (m % 2 == 0)) CHECK(general_bernoulli_exact(chi, m).is_zero());
    }
  }
}

TEST_CASE("embedding matches the exact value") {
  const DirichletCharacter chi = omega_power(7, 1, 8);
  for (unsigned long m = 1; m <= 5; ++m) {
    const CyclotomicNumber exact = general_bernoulli_exact(chi, m);
    CHECK(general_bernoulli(chi, m) == exact.embed(chi.roots().zeta(), 8));
  }
}

TEST_CASE("even-character limit at finite level") {
  const long prec = 20;
  const DirichletCharacter chi = omega_power(5, 2, prec);
  const PadicNum target = even_character_limit(chi, 1, 2);
  CHECK(eq_mod(target, PadicNum::from_rational(5, Rational(-2, 3), prec), prec));
  auto gap = [&](unsigned long j) { return (even_character_truncation(chi, 1, 2, j) - target).valuation_of().value; };
  CHECK(gap(2) >= 1);
  CHECK(gap(4) > gap(2));
  long previous = gap(2);
  for (unsigned long j = 3; j <= 5; ++j) {
    CHECK(gap(j) >= previous);
    previous = gap(j);
  }
}

TEST_CASE("unit sum decay") {
  const DirichletCharacter chi = omega_power(5, 2, 20);
  long previous = unit_character_sum(chi, 1, 2, 2).valuation_of().value;
  CHECK(previous >= 1);
  for (unsigned long j = 3; j <= 5; ++j) {
    const long v = unit_character_sum(chi, 1, 2, j).valuation_of().value;
    CHECK(v >= previous);
    previous = v;
  }
}

TEST_CASE("preconditions") {
  const DirichletCharacter chi = omega_power(5, 2, 8);
  CHECK_THROWS_AS(even_character_truncation(omega_power(5, 1, 8), 1, 2, 2), PreconditionViolation);
  CHECK_THROWS_AS(unit_character_sum(omega_power(5, 3, 8), 1, 2, 2), PreconditionViolation);
  CHECK_THROWS_AS(even_character_truncation(chi, 5, 2, 2), PreconditionViolation);
  CHECK_THROWS_AS(even_character_truncation(change_level(chi, 10), 3, 2, 2), PreconditionViolation);
  CHECK_THROWS_AS(even_character_truncation(chi, 1, 0, 2), PreconditionViolation);
  CHECK_THROWS_AS(even_character_truncation(change_level(chi, 25), 1, 2, 1), LevelTooLow);
  CHECK_THROWS_AS(even_character_truncation(chi, 1, 2, 9), InsufficientPrecision);
  CHECK_NOTHROW(even_character_truncation(change_level(chi, 10), 2, 2, 2));
  CHECK(check_even_character_setup(change_level(chi, 50), 2) == 2);
}

#include <doctest.h>

#include "lpadic/errors.hpp"
#include "lpadic/genbernoulli.hpp"
#include "lpadic/json_io.hpp"
#include "lpadic/lfunction.hpp"

using namespace lpadic;

namespace {

LpParams omega2_params(long c, long relprec = 12, unsigned long j_max = 7, long target = 4) {
  return LpParams(BernoulliParams(5, 1, c), 1, omega_power(5, 2, relprec), relprec, 0, j_max, target);
}

bool vanishes_to(const PadicNum& x, long abs) {
  const auto bound = valuation_lower_bound(x);
  return !bound || *bound >= abs;
}

}  // namespace

TEST_CASE("weight_eval") {
  const PadicNum w = weight_eval(Weight{1}, 5, UnitResidue(Residue(125, 2)), 3);
  // omega(2) = 57 mod 125
  CHECK(w.appr(3) == (2 * inverse_mod(57, 125).value()) % 125);
  CHECK(w.to_zmod_pow(1).value() == 1);
  for (long a : {1, 2, 3, 4, 7, 13, 24}) {
    for (unsigned long k : {0UL, 1UL, 2UL, 5UL}) {
      const PadicNum v = weight_eval(Weight{k}, 5, UnitResidue(Residue(25, a)), 6);
      CHECK(v.valuation() == 0);
      CHECK(v.to_zmod_pow(1).value() == 1);
    }
  }
  CHECK(weight_eval(Weight{0}, 7, UnitResidue(Residue(7, 3)), 5) == PadicNum::one(7, 5));
  CHECK_THROWS_AS(weight_eval(Weight{1}, 5, UnitResidue(Residue(7, 2)), 5), InvalidArgument);
}

TEST_CASE("parameter validation") {
  const BernoulliParams measure(5, 1, 2);
  CHECK_NOTHROW(LpParams(measure, 1, omega_power(5, 2, 8), 8, 0, 5, 4));
  CHECK_THROWS_AS(LpParams(measure, 1, make_teich_char(5, 8), 8, 0, 5, 4), PreconditionViolation);
  CHECK_THROWS_AS(LpParams(measure, 0, omega_power(5, 2, 8), 8, 0, 5, 4), PreconditionViolation);
  CHECK_THROWS_AS(LpParams(measure, 2, omega_power(5, 2, 8), 8, 0, 5, 4), PreconditionViolation);
  CHECK_THROWS_AS(LpParams(measure, 3, change_level(omega_power(5, 2, 8), 125), 8, 0, 2, 4), PreconditionViolation);
  CHECK_THROWS_AS(LpParams(measure, 1, omega_power(5, 2, 8), 8, 6, 5, 4), PreconditionViolation);
  CHECK_THROWS_AS(LpParams(measure, 1, omega_power(3, 0, 8), 8, 0, 5, 4), PreconditionViolation);
  CHECK_THROWS_AS(LpParams(measure, 1, omega_power(5, 2, 8), 8, 0, 5, 0), InvalidArgument);
  // d must divide the conductor: trivial at level 2 * 5 has conductor 1
  const auto roots = TeichmullerTable::get(5, 8);
  CHECK_THROWS_AS(LpParams(BernoulliParams(5, 2, 3), 1, DirichletCharacter::trivial(roots, 10), 8, 0, 5, 4),
                  PreconditionViolation);
  const LpParams ok = omega2_params(2, 10, 5);
  CHECK(ok.working_precision() == 15);
  CHECK(ok.chi().relprec() == 15);
}

TEST_CASE("integrand") {
  // trivial chi at k = 0 leaves omega^{-1}(a)
  const LpParams triv(BernoulliParams(3, 1, 2), 1, change_level(omega_power(3, 0, 8), 3), 8, 0, 5, 4);
  for (long a : {1, 2, 4, 5, 7, 8}) {
    const PadicNum v = integrand_eval(triv, Weight{0}, UnitResidue(Residue(9, a)));
    CHECK(v.appr(8) == TeichmullerTable::get(3, 13)->omega(a).inv().appr(8));
  }

  const LpParams params = omega2_params(2);
  CHECK_THROWS(integrand_eval(params, Weight{0}, UnitResidue(Residue(1, 0))));
  // omega^2 * omega^{-1} = omega, and omega <a> = a
  for (long a : {1, 2, 3, 4, 6, 7, 24}) {
    const PadicNum v = integrand_eval(params, Weight{1}, UnitResidue(Residue(25, a)));
    CHECK(v.appr(10) == a);
  }
}

TEST_CASE("riemann_sum against the measure") {
  const LpParams params = omega2_params(2, 10, 5);
  const long prec = params.working_precision();
  for (unsigned long j = 1; j <= 3; ++j) {
    for (unsigned long k : {0UL, 1UL, 3UL}) {
      const Integer modulus = params.measure().modulus(j);
      std::vector<PadicNum> values;
      for (Integer a = 0; a < modulus; ++a) {
        if (gcd(a, modulus) == 1) {
          values.push_back(integrand_eval(params, Weight{k}, UnitResidue(Residue(modulus, a))));
        } else {
          values.push_back(PadicNum::from_integer(5, 17, prec));
        }
      }
      const CylinderFunction f(1, 5, j, values);
      const PadicNum direct = measure_apply(params.measure(), extend_by_zero(f), prec);
      CHECK(vanishes_to(riemann_sum(params, Weight{k}, j) - direct, params.relprec()));
    }
  }
  CHECK_THROWS_AS(riemann_sum(LpParams(BernoulliParams(5, 1, 2), 2, change_level(omega_power(5, 2, 8), 25), 8, 0, 5, 4),
                              Weight{0}, 1),
                  LevelTooLow);
}

TEST_CASE("p_adic_L convergence") {
  const LpParams params = omega2_params(2);
  const EvalReport k0 = p_adic_L(params, Weight{0});
  CHECK(k0.converged);
  CHECK(k0.level_used >= params.m() + 1);
  CHECK(k0.tail_valuation >= params.target_valuation());
  CHECK(!k0.increments.empty());

  const EvalReport k1 = p_adic_L(params, Weight{1});
  CHECK(k1.converged);
  CHECK(k1.level_used <= params.j_max());
  // increments shrink at least as fast as p^j once past the level of chi
  for (std::size_t i = 1; i < k1.increments.size(); ++i) {
    CHECK(k1.increments[i].second >= static_cast<long>(k1.increments[i].first) - 1);
  }

  const LpParams too_precise(BernoulliParams(5, 1, 2), 1, omega_power(5, 2, 3), 3, 0, 5, 4);
  CHECK_THROWS_AS(p_adic_L(too_precise, Weight{1}), InsufficientPrecision);
  const LpParams short_window(BernoulliParams(5, 1, 2), 1, omega_power(5, 2, 12), 12, 0, 1, 4);
  CHECK_FALSE(p_adic_L(short_window, Weight{1}).converged);
}

TEST_CASE("rhs special value") {
  // n = 2, chi = omega^2 on p = 5, c = 2: chi omega^{-2} is trivial and
  // omega^2(2) <2>^2 = 4, so R = (1/2) (1 - 4) (1 - 5) (1/6) = 1
  const LpParams params = omega2_params(2);
  const PadicNum r = rhs_special_value(params, 2);
  CHECK(vanishes_to(r - PadicNum::one(5, 12), params.relprec()));
  // c = 3: omega^2(3) <3>^2 = 9, R = (1/2) (-8) (-4) (1/6) = 8/3
  const PadicNum r3 = rhs_special_value(omega2_params(3), 2);
  CHECK(vanishes_to(r3 - PadicNum::from_rational(5, Rational(8, 3), 12), params.relprec()));
  CHECK_THROWS(rhs_special_value(params, 0));
}

TEST_CASE("interpolation") {
  for (long c : {2, 3}) {
    const LpParams params = omega2_params(c);
    for (unsigned long n : {2UL, 4UL}) {
      const InterpolationReport report = verify_interpolation(params, n);
      CHECK(report.converged);
      CHECK(report.pass);
      CHECK(report.sign == Sign::Plus);
      CHECK(report.valuation_of_difference >= params.target_valuation());
      CHECK(report.valuation_minus >= params.target_valuation());
      CHECK(report.valuation_plus < params.target_valuation());
      CHECK(verify_interpolation(params, n, Sign::Plus).pass);
      CHECK_FALSE(verify_interpolation(params, n, Sign::Minus).pass);
    }
  }
  const auto triv3 = [](long c) {
    const auto roots = TeichmullerTable::get(3, 12);
    return LpParams(BernoulliParams(3, 1, c), 1, DirichletCharacter::trivial(roots, 3), 12, 0, 7, 4);
  };
  for (long c : {2, 5}) {
    for (unsigned long n : {2UL, 4UL}) CHECK(verify_interpolation(triv3(c), n).pass);
  }
  CHECK_THROWS_AS(verify_interpolation(omega2_params(2), 1), PreconditionViolation);
}

TEST_CASE("sign parsing") {
  CHECK(parse_sign("+") == Sign::Plus);
  CHECK(parse_sign("-") == Sign::Minus);
  CHECK(to_string(Sign::Minus) == "-");
  CHECK_THROWS(parse_sign("plus minus"));
}

TEST_CASE("JSON round trips") {
  const LpParams params = omega2_params(2);
  const EvalReport eval = p_adic_L(params, Weight{1});
  const EvalReport eval_back = eval_report_from_json(eval_report_to_json(eval), 5);
  CHECK(eval_back.value == eval.value);
  CHECK(eval_back.level_used == eval.level_used);
  CHECK(eval_back.increments == eval.increments);

  const InterpolationReport report = verify_interpolation(params, 2);
  const InterpolationReport back = interpolation_report_from_json(interpolation_report_to_json(report), 5);
  CHECK(back.lhs == report.lhs);
  CHECK(back.rhs == report.rhs);
  CHECK(back.sign == report.sign);
  CHECK(back.pass == report.pass);
  CHECK(back.valuation_plus == report.valuation_plus);

  for (const PadicNum& x : {PadicNum::exact_zero(5), PadicNum::exhausted_zero(5, 7),
                            PadicNum::from_rational(5, Rational(-3, 25), 6)}) {
    CHECK(padic_from_json(padic_to_json(x), 5) == x);
  }
  CHECK_THROWS_AS(padic_from_json(padic_to_json(PadicNum::one(7, 3)), 5), InvalidArgument);
  CHECK(integer_from_json(integer_to_json(Integer("123456789012345678901234567890"))) ==
        Integer("123456789012345678901234567890"));
}

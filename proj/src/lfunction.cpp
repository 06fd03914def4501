#include "lpadic/lfunction.hpp"

#include "lpadic/errors.hpp"
#include "lpadic/genbernoulli.hpp"

namespace lpadic {

namespace {

DirichletCharacter at_precision(const DirichletCharacter& chi, long relprec) {
  return DirichletCharacter::from_exponents(TeichmullerTable::get(chi.prime(), relprec), chi.level(),
                                            chi.exponents());
}

// chi omega^{-1} and omega at the working precision, shared across a sum.
struct Integrand {
  DirichletCharacter twisted;
  std::shared_ptr<const TeichmullerTable> roots;
  long prec;

  explicit Integrand(const LpParams& params)
      : twisted(twist_by_omega_inverse(params.chi(), 1)),
        roots(params.chi().roots_ptr()),
        prec(params.working_precision()) {}

  // zeta^{e(a) - k ind(a)} a^k, i.e. (chi omega^{-1})(a) omega(a)^{-k} a^k.
  PadicNum operator()(const Weight& w, const Integer& a) const {
    const auto e = twisted.exponent_at(a);
    if (!e) throw NotAUnit(a.get_str() + " is not a unit for the integrand");
    const long k = static_cast<long>(w.k);
    return roots->root(*e - k * roots->index(a)) * PadicNum::from_integer(roots->prime(), ipow(a, w.k), prec);
  }
};

void check_level(const LpParams& params, unsigned long j) {
  if (j < params.m()) {
    throw LevelTooLow("level " + std::to_string(j) + " is below m = " + std::to_string(params.m()));
  }
}

}  // namespace

LpParams::LpParams(BernoulliParams measure, unsigned long m, const DirichletCharacter& chi, long relprec,
                   unsigned long j_min, unsigned long j_max, long target_valuation)
    : measure_(std::move(measure)),
      m_(m),
      chi_(chi),
      relprec_(relprec),
      j_min_(j_min),
      j_max_(j_max),
      target_(target_valuation) {
  if (chi.prime() != measure_.p()) throw PreconditionViolation("chi is not a character for p = " + p().get_str());
  if (m < 1) throw PreconditionViolation("m must be at least 1");
  if (relprec < 1) throw InvalidArgument("relprec must be positive");
  if (target_valuation < 1) throw InvalidArgument("target valuation must be positive");
  if (j_max < m) {
    throw PreconditionViolation("jmax = " + std::to_string(j_max) + " is below m = " + std::to_string(m));
  }
  if (j_min > j_max) throw PreconditionViolation("jmin exceeds jmax");
  const Integer level = measure_.modulus(m);
  if (chi.level() != level) {
    throw PreconditionViolation("chi has level " + chi.level().get_str() + ", expected d p^m = " + level.get_str());
  }
  if (parity(chi) != Parity::Even) throw PreconditionViolation("chi must be even");
  if (conductor(chi) % d() != 0) throw PreconditionViolation("d must divide the conductor of chi");
  chi_ = at_precision(chi, working_precision());
}

PadicNum weight_eval(const Weight& w, const Integer& p, const UnitResidue& a, long relprec) {
  if (a.modulus() % p != 0) throw InvalidArgument("weight_eval: modulus must be a multiple of p");
  const auto roots = TeichmullerTable::get(p, relprec);
  const PadicNum bracket = roots->omega(a.value()).inv() * PadicNum::from_integer(p, a.value(), relprec);
  return bracket.pow(static_cast<long>(w.k));
}

PadicNum integrand_eval(const LpParams& params, const Weight& w, const UnitResidue& a) {
  const Integer& modulus = a.modulus();
  Integer rest = modulus / params.d();
  unsigned long j = 0;
  if (modulus % params.d() != 0) throw InvalidArgument("integrand_eval: modulus is not d p^j");
  while (rest % params.p() == 0) {
    rest /= params.p();
    ++j;
  }
  if (rest != 1) throw InvalidArgument("integrand_eval: modulus is not d p^j");
  check_level(params, j);
  const long prec = params.working_precision();
  const DirichletCharacter twisted = twist_by_omega_inverse(params.chi(), 1);
  return asso_eval(twisted, a.residue()) * weight_eval(w, params.p(), a, prec);
}

PadicNum riemann_sum(const LpParams& params, const Weight& w, unsigned long j) {
  check_level(params, j);
  const Integrand integrand(params);
  const Integer& p = params.p();
  const Integer modulus = params.measure().modulus(j);
  const Integer dp = params.d() * p;
  const long prec = params.working_precision();
  PadicNum acc = PadicNum::exact_zero(p);
  for (Integer a = 1; a < modulus; ++a) {
    if (gcd(a, dp) != 1) continue;
    const Rational weight = bernoulli_distribution(params.measure(), j, Residue(modulus, a));
    if (weight == 0) continue;
    acc += integrand(w, a) * PadicNum::from_rational(p, weight, prec);
  }
  return acc;
}

std::optional<long> valuation_lower_bound(const PadicNum& x) {
  const Valuation v = x.valuation_of();
  if (v.infinite) return std::nullopt;
  return v.value;
}

namespace {

bool clears(const PadicNum& x, long target) {
  const auto v = valuation_lower_bound(x);
  return !v || *v >= target;
}

long bound_or(const PadicNum& x, long fallback) {
  const auto v = valuation_lower_bound(x);
  return v ? *v : fallback;
}

}  // namespace

EvalReport p_adic_L(const LpParams& params, const Weight& w) {
  const long target = params.target_valuation();
  if (target > params.relprec()) {
    throw InsufficientPrecision("target valuation " + std::to_string(target) + " exceeds relprec " +
                                std::to_string(params.relprec()));
  }
  const long exact_bound = params.working_precision();
  const unsigned long start = std::max(params.j_min(), params.m());
  PadicNum previous = riemann_sum(params, w, start);
  EvalReport report{previous, start, false, 0, {}};
  unsigned long run = 0;
  for (unsigned long j = start + 1; j <= params.j_max(); ++j) {
    PadicNum current = riemann_sum(params, w, j);
    const PadicNum increment = current - previous;
    const long v = bound_or(increment, exact_bound);
    report.increments.emplace_back(j, v);
    report.value = current;
    report.level_used = j;
    report.tail_valuation = v;
    run = clears(increment, target) ? run + 1 : 0;
    if (run >= 2 && j >= params.m() + 1) {
      report.converged = true;
      break;
    }
    previous = std::move(current);
  }
  return report;
}

PadicNum rhs_special_value(const LpParams& params, unsigned long n) {
  if (n < 1) throw PreconditionViolation("n must be at least 1");
  const Integer& p = params.p();
  const long prec = params.working_precision();
  const DirichletCharacter& chi = params.chi();
  const PadicNum one = PadicNum::one(p, prec);

  const Integer chi_level = params.measure().modulus(params.m());
  const PadicNum chi_c = asso_eval(chi, Residue(chi_level, params.c()));
  // omega reads c mod p; the Z_p lift of c is c itself.
  const PadicNum c_power = TeichmullerTable::get(p, prec)->omega(params.c()).inv().pow(static_cast<long>(n)) *
                           PadicNum::from_integer(p, ipow(params.c(), n), prec);
  const PadicNum c_factor = one - chi_c * c_power;

  const DirichletCharacter psi = twist_by_omega_inverse(chi, static_cast<long>(n));
  const PadicNum euler = one - psi.value_at(p) * PadicNum::from_integer(p, ipow(p, n - 1), prec);
  const PadicNum inv_n = PadicNum::from_rational(p, Rational(1, n), prec);
  return inv_n * c_factor * euler * general_bernoulli(psi, n);
}

std::string to_string(Sign sign) { return sign == Sign::Plus ? "+" : "-"; }

Sign parse_sign(const std::string& text) {
  if (text == "+") return Sign::Plus;
  if (text == "-") return Sign::Minus;
  throw InvalidArgument("sign must be + or -, got '" + text + "'");
}

InterpolationReport verify_interpolation(const LpParams& params, unsigned long n, std::optional<Sign> pinned) {
  if (n < 2) throw PreconditionViolation("n must be at least 2");
  const long target = params.target_valuation();
  const EvalReport lhs = p_adic_L(params, Weight{n - 1});
  const PadicNum rhs = rhs_special_value(params, n);
  const PadicNum minus = lhs.value - rhs;
  const PadicNum plus = lhs.value + rhs;
  const long exact_bound = params.working_precision();

  InterpolationReport report{n, lhs.value, rhs};
  report.converged = lhs.converged;
  report.level_used = lhs.level_used;
  report.valuation_minus = bound_or(minus, exact_bound);
  report.valuation_plus = bound_or(plus, exact_bound);
  const bool minus_ok = clears(minus, target);
  const bool plus_ok = clears(plus, target);
  if (minus_ok != plus_ok) {
    report.sign = minus_ok ? Sign::Plus : Sign::Minus;
  } else {
    report.sign = report.valuation_minus >= report.valuation_plus ? Sign::Plus : Sign::Minus;
  }
  report.valuation_of_difference = report.sign == Sign::Plus ? report.valuation_minus : report.valuation_plus;
  report.pass = lhs.converged && minus_ok != plus_ok && (!pinned || *pinned == report.sign);
  return report;
}

}  // namespace lpadic

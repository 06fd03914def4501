#include "lpadic/suite.hpp"

#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "lpadic/bernoulli.hpp"
#include "lpadic/errors.hpp"
#include "lpadic/genbernoulli.hpp"

namespace lpadic {

SuiteProfile suite_profile(const std::string& name) {
  if (name == "full") return SuiteProfile{"full"};
  if (name == "fast") {
    SuiteProfile fast{"fast"};
    fast.conductor_max_level = 40;
    fast.compatibility_max_level = 2;
    fast.boundedness_samples = 40;
    fast.cylinder_samples = 10;
    return fast;
  }
  throw InvalidArgument("unknown suite profile '" + name + "' (expected fast or full)");
}

namespace {

CriterionResult make_result(bool pass, std::string detail) {
  CriterionResult r;
  r.pass = pass;
  r.detail = std::move(detail);
  return r;
}

// ---- 1: Bernoulli identities ------------------------------------------------

CriterionResult check_bernoulli_identities(const SuiteProfile&, std::uint64_t) {
  for (unsigned long n = 0; n <= 20; ++n) {
    RationalPolynomial sum;
    for (unsigned long k = 0; k <= n; ++k) sum = sum + bernoulli_poly(k) * Rational(binomial(n + 1, k));
    if (!(sum == RationalPolynomial::monomial(Rational(n + 1), n))) {
      return make_result(false, "sum identity fails at n = " + std::to_string(n));
    }
  }
  for (unsigned long q = 0; q <= 8; ++q) {
    const RationalPolynomial b = bernoulli_poly(q + 1);
    Integer direct = q == 0 ? 1 : 0;  // the i = 0 term
    for (unsigned long big_m = 1; big_m <= 50; ++big_m) {
      Rational closed = (b.eval(Rational(big_m)) - b.eval(Rational(0))) / Rational(q + 1);
      closed.canonicalize();
      if (closed != Rational(direct)) {
        return make_result(false, "Faulhaber fails at q = " + std::to_string(q) + ", M = " + std::to_string(big_m));
      }
      direct += ipow(Integer(big_m), q);
    }
  }
  return make_result(true, "sum identity for n <= 20, Faulhaber for q <= 8, M <= 50");
}

// ---- 2: Teichmuller ---------------------------------------------------------

CriterionResult check_teichmuller(const SuiteProfile&, std::uint64_t) {
  const long prec = 8;
  int checked = 0;
  for (int p : {3, 5, 7, 11}) {
    const Integer big_p = p;
    const auto table = TeichmullerTable::get(big_p, prec);
    const PadicNum one = PadicNum::one(big_p, prec);
    for (int a = 1; a < p; ++a) {
      const PadicNum w = teichmuller(big_p, UnitResidue(Residue(big_p, a)), prec);
      if (w.appr(1) != a) return make_result(false, "omega(a) != a mod p at p = " + std::to_string(p));
      if (!eq_mod(w.pow(p - 1), one, prec)) {
        return make_result(false, "omega(a)^(p-1) != 1 at p = " + std::to_string(p) + ", a = " + std::to_string(a));
      }
      if (!(table->omega(a) == w)) return make_result(false, "table and direct lift disagree");
      ++checked;
    }
    if (!(teichmuller(big_p, UnitResidue(Residue(big_p, -1)), prec) == PadicNum::from_integer(big_p, -1, prec))) {
      return make_result(false, "omega(-1) != -1 at p = " + std::to_string(p));
    }
  }
  return make_result(true, std::to_string(checked) + " units over p in {3,5,7,11} at precision 8");
}

// ---- 3: conductor machinery -------------------------------------------------

// Least divisor f of the level such that chi(a) depends only on a mod f.
Integer brute_force_conductor(const DirichletCharacter& chi) {
  const unsigned long level = to_ulong(chi.level());
  for (unsigned long f = 1; f <= level; ++f) {
    if (level % f != 0) continue;
    std::map<unsigned long, long> seen;
    bool ok = true;
    for (unsigned long a = 0; a < level && ok; ++a) {
      const auto e = chi.exponent_at(a);
      if (!e) continue;
      const auto [it, inserted] = seen.emplace(a % f, *e);
      ok = inserted || it->second == *e;
    }
    if (ok) return f;
  }
  return level;
}

std::string table_json(const DirichletCharacter& chi) {
  Json entries = Json::object();
  const Integer& p = chi.prime();
  for (Integer a = 0; a < chi.level(); ++a) {
    const auto e = chi.exponent_at(a);
    if (!e) continue;
    Integer t;
    mpz_powm_ui(t.get_mpz_t(), chi.roots().generator().get_mpz_t(), static_cast<unsigned long>(*e), p.get_mpz_t());
    entries[a.get_str()] = integer_to_json(t);
  }
  return Json{{"p", integer_to_json(p)}, {"modulus", integer_to_json(chi.level())}, {"entries", entries}}.dump();
}

std::string describe(const DirichletCharacter& chi) {
  std::ostringstream out;
  out << "character mod " << chi.level() << " at p = " << chi.prime();
  return out.str();
}

// Empty string on success, otherwise the failure.
std::string check_one_conductor(const DirichletCharacter& chi) {
  const Integer f = conductor(chi);
  if (f != brute_force_conductor(chi)) return "conductor mismatch for " + describe(chi);
  for (int scale : {2, 3}) {
    if (conductor(change_level(chi, chi.level() * scale)) != f) {
      return "change_level changes the conductor of " + describe(chi);
    }
  }
  const DirichletCharacter primitive = asso_primitive(chi);
  if (primitive.level() != f || !is_primitive(primitive)) return "asso_primitive not primitive for " + describe(chi);
  if (!(change_level(primitive, chi.level()) == chi)) return "asso_primitive does not round-trip for " + describe(chi);
  if (!(asso_primitive(change_level(chi, chi.level() * 2)) == primitive)) {
    return "asso_primitive depends on the level for " + describe(chi);
  }
  return {};
}

CriterionResult check_conductors(const SuiteProfile& profile, std::uint64_t) {
  const long prec = 4;
  std::size_t omega_count = 0;
  std::size_t table_count = 0;
  for (int p : {3, 5, 7, 11}) {
    for (long k = 0; k < p - 1; ++k) {
      const DirichletCharacter omega_k = omega_power(p, k, prec);
      for (unsigned long t = 1; static_cast<unsigned long>(p) * t <= profile.conductor_max_level; ++t) {
        const std::string failure = check_one_conductor(change_level(omega_k, Integer(p) * t));
        if (!failure.empty()) return make_result(false, failure);
        ++omega_count;
      }
    }
  }
  for (int p : {3, 5, 7}) {
    const auto roots = TeichmullerTable::get(p, prec);
    for (unsigned long level = 1; level <= profile.conductor_max_level; ++level) {
      for (const DirichletCharacter& chi : all_characters(roots, level)) {
        const DirichletCharacter loaded = character_from_table_json(table_json(chi), prec);
        if (!(loaded == chi)) return make_result(false, "table round-trip fails for " + describe(chi));
        const std::string failure = check_one_conductor(loaded);
        if (!failure.empty()) return make_result(false, failure);
        ++table_count;
      }
    }
  }
  return make_result(true, std::to_string(omega_count) + " omega-power and " + std::to_string(table_count) +
                               " table characters of level <= " + std::to_string(profile.conductor_max_level));
}

// ---- 4: generalized Bernoulli numbers ---------------------------------------

CriterionResult check_generalized_bernoulli(const SuiteProfile&, std::uint64_t) {
  const long prec = 4;
  std::vector<DirichletCharacter> characters;
  for (const auto& [p, max_level] : std::vector<std::pair<int, int>>{{3, 27}, {5, 25}, {7, 21}}) {
    const auto roots = TeichmullerTable::get(p, prec);
    for (int level = 1; level <= max_level; ++level) {
      for (const DirichletCharacter& chi : all_characters(roots, level)) {
        if (is_primitive(chi)) characters.push_back(chi);
      }
    }
  }
  for (const DirichletCharacter& chi : characters) {
    for (unsigned long m = 0; m <= 6; ++m) {
      const CyclotomicNumber base = general_bernoulli_exact(chi, m);
      for (int scale : {1, 2, 3}) {
        if (!(general_bernoulli_via_multiple_exact(chi, m, chi.level() * scale) == base)) {
          return make_result(false, "F-independence fails for " + describe(chi) + ", m = " + std::to_string(m) +
                                        ", F = " + std::to_string(scale) + " f");
        }
      }
    }
  }
  const CyclotomicNumber b1 = general_bernoulli_exact(omega_power(3, 1, prec), 1);
  if (!b1.is_rational() || b1.rational_value() != Rational(-1, 3)) {
    return make_result(false, "B_{1,chi_3} = " + b1.to_string() + ", expected -1/3");
  }
  return make_result(true, std::to_string(characters.size()) +
                               " primitive characters, m <= 6, F in {f, 2f, 3f}; B_{1,chi_3} = -1/3");
}

// ---- 5: distribution compatibility -----------------------------------------

std::vector<BernoulliParams> compatibility_grid() {
  std::vector<BernoulliParams> grid;
  for (int p : {3, 5, 7}) {
    for (int d : {1, 2, 4}) {
      if (gcd(Integer(d), Integer(p)) != 1) continue;
      for (int c : {2, 3, 7}) {
        if (gcd(Integer(c), Integer(d * p)) != 1) continue;
        grid.emplace_back(p, d, c);
      }
    }
  }
  return grid;
}

CriterionResult check_distribution(const SuiteProfile& profile, std::uint64_t) {
  const auto grid = compatibility_grid();
  std::size_t division_failures = 0;
  for (const BernoulliParams& params : grid) {
    const auto failures = compatibility_sweep(params, profile.compatibility_max_level);
    if (!failures.empty()) {
      const auto& f = failures.front();
      return make_result(false, "E_c not compatible at p = " + params.p().get_str() + ", d = " + params.d().get_str() +
                                    ", c = " + params.c().get_str() + ", level " + std::to_string(f.level) +
                                    ", x = " + f.x.get_str());
    }
    division_failures +=
        compatibility_sweep(params, profile.compatibility_max_level, DistributionVariant::RationalDivision).size();
  }
  if (division_failures == 0) return make_result(false, "rational-division variant unexpectedly compatible");
  return make_result(true, std::to_string(grid.size()) + " parameter sets, levels <= " +
                               std::to_string(profile.compatibility_max_level) +
                               "; rational-division variant fails at " + std::to_string(division_failures) + " points");
}

// ---- 6: boundedness ---------------------------------------------------------

CriterionResult check_boundedness(const SuiteProfile& profile, std::uint64_t seed) {
  const std::vector<std::tuple<int, int, int>> sets{{3, 1, 2}, {3, 2, 5}, {5, 1, 2}, {5, 1, 3},
                                                    {5, 2, 3}, {7, 1, 2}, {7, 2, 3}};
  std::mt19937_64 rng(seed);
  for (const auto& [p, d, c] : sets) {
    const BernoulliParams params(p, d, c);
    const auto failures = boundedness_sweep(params, 3, profile.boundedness_samples, 8, rng);
    if (!failures.empty()) {
      const auto& f = failures.front();
      return make_result(false, "bound violated at p = " + std::to_string(p) + ", level " + std::to_string(f.level) +
                                    ": " + to_string(f.lhs) + " > " + to_string(f.rhs));
    }
  }
  return make_result(true, std::to_string(profile.boundedness_samples) + " random cylinders on each of " +
                               std::to_string(sets.size()) + " parameter sets, levels <= 3");
}

// ---- 7: locally constant integrands ----------------------------------------

// sum over units a mod d p^j of f(a) E_c(j, a) for f given mod d p^level.
Rational exact_unit_riemann_sum(const BernoulliParams& params, const std::vector<Rational>& f, unsigned long j) {
  const Integer modulus = params.modulus(j);
  const Integer dp = params.d() * params.p();
  const Integer f_modulus = Integer(static_cast<unsigned long>(f.size()));
  Rational sum = 0;
  for (Integer a = 0; a < modulus; ++a) {
    if (gcd(a, dp) != 1) continue;
    sum += f[mod(a, f_modulus).get_ui()] * bernoulli_distribution(params, j, Residue(modulus, a));
  }
  sum.canonicalize();
  return sum;
}

CriterionResult check_locally_constant(const SuiteProfile& profile, std::uint64_t seed) {
  const Integer p = 5;
  std::mt19937_64 rng(seed ^ 0x7a3bULL);
  std::uniform_int_distribution<unsigned long> level_pick(1, 3);
  std::uniform_int_distribution<long> numerator(-1000, 1000);
  std::uniform_int_distribution<unsigned long> p_power(0, 2);
  for (std::size_t i = 0; i < profile.cylinder_samples; ++i) {
    const BernoulliParams params(p, 1, i % 2 == 0 ? 2 : 3);
    const unsigned long level = level_pick(rng);
    std::vector<Rational> f(to_ulong(params.modulus(level)));
    for (auto& v : f) {
      v = Rational(numerator(rng), ipow(p, p_power(rng)));
      v.canonicalize();
    }
    const Rational base = exact_unit_riemann_sum(params, f, level);
    for (unsigned long j = level + 1; j <= level + 2; ++j) {
      if (exact_unit_riemann_sum(params, f, j) != base) {
        return make_result(false, "Riemann sum moved between levels " + std::to_string(level) + " and " +
                                      std::to_string(j) + " (sample " + std::to_string(i) + ")");
      }
    }
  }
  // Character integrand with weight 0: locally constant at level m = 1.
  const LpParams lp(BernoulliParams(p, 1, 2), 1, omega_power(p, 2, 8), 8, 0, 4, 4);
  const PadicNum s1 = riemann_sum(lp, Weight{0}, 1);
  for (unsigned long j = 2; j <= 4; ++j) {
    const PadicNum diff = riemann_sum(lp, Weight{0}, j) - s1;
    if (!diff.is_exact_zero() && !diff.is_exhausted_zero()) {
      return make_result(false, "weight-0 Riemann sum moved at level " + std::to_string(j));
    }
  }
  return make_result(true, std::to_string(profile.cylinder_samples) +
                               " random cylinders at p = 5, d = 1, levels <= 3 stable in exact arithmetic");
}

// ---- 8, 9: limits at finite level -------------------------------------------

std::string valuation_list(const std::vector<long>& vs) {
  std::string out;
  for (long v : vs) out += (out.empty() ? "" : ",") + std::to_string(v);
  return "[" + out + "]";
}

bool nondecreasing(const std::vector<long>& vs) {
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (vs[i] < vs[i - 1]) return false;
  }
  return true;
}

long valuation_or(const PadicNum& x, long fallback) {
  const auto v = valuation_lower_bound(x);
  return v ? *v : fallback;
}

CriterionResult check_even_limit(const SuiteProfile&, std::uint64_t) {
  const long prec = 24;
  const DirichletCharacter chi = omega_power(5, 2, prec);
  std::string detail;
  for (unsigned long k : {2UL, 4UL}) {
    const PadicNum target = even_character_limit(chi, 1, k);
    std::vector<long> vs;
    for (unsigned long j = 2; j <= 5; ++j) vs.push_back(valuation_or(even_character_truncation(chi, 1, k, j) - target, prec));
    detail += (detail.empty() ? "" : "; ") + std::string("k = ") + std::to_string(k) + ": " + valuation_list(vs);
    if (vs.front() < 1 || !nondecreasing(vs)) return make_result(false, detail);
  }
  return make_result(true, "nu_5(truncation_j - target), j = 2..5: " + detail);
}

CriterionResult check_unit_sum(const SuiteProfile&, std::uint64_t) {
  const long prec = 24;
  const DirichletCharacter chi = omega_power(5, 2, prec);
  std::string detail;
  for (unsigned long k : {2UL, 4UL}) {
    std::vector<long> vs;
    for (unsigned long j = 2; j <= 5; ++j) vs.push_back(valuation_or(unit_character_sum(chi, 1, k, j), prec));
    detail += (detail.empty() ? "" : "; ") + std::string("k = ") + std::to_string(k) + ": " + valuation_list(vs);
    if (!nondecreasing(vs)) return make_result(false, detail);
  }
  return make_result(true, "nu_5(unit sum), j = 2..5: " + detail);
}

// ---- 10: interpolation ------------------------------------------------------

CriterionResult check_interpolation(const SuiteProfile& profile, std::uint64_t) {
  struct Case {
    int p;
    long omega_exponent;
    int c;
    unsigned long n;
  };
  std::vector<Case> cases;
  for (int c : {2, 3}) {
    for (unsigned long n : {2UL, 4UL}) cases.push_back({5, 2, c, n});
  }
  for (int c : {2, 5}) {
    for (unsigned long n : {2UL, 4UL}) cases.push_back({3, 0, c, n});
  }
  const long relprec = 12;
  const long target = 4;
  std::optional<Sign> global;
  std::string detail;
  bool pass = true;
  for (const Case& cs : cases) {
    const DirichletCharacter chi = change_level(omega_power(cs.p, cs.omega_exponent, relprec), cs.p);
    const LpParams params(BernoulliParams(cs.p, 1, cs.c), 1, chi, relprec, 0, profile.interpolation_jmax, target);
    const InterpolationReport r = verify_interpolation(params, cs.n);
    if (!global) global = r.sign;
    const bool ok = r.pass && r.sign == *global;
    pass = pass && ok;
    std::ostringstream item;
    item << "p=" << cs.p << " c=" << cs.c << " n=" << cs.n << ": j=" << r.level_used << " nu=" << r.valuation_of_difference
         << (ok ? "" : " FAIL");
    detail += (detail.empty() ? "" : "; ") + item.str();
  }
  return make_result(pass, "sign " + to_string(*global) + "; " + detail);
}

// ---- 11: Kummer congruence --------------------------------------------------

CriterionResult check_kummer(const SuiteProfile&, std::uint64_t) {
  const Integer p = 5;
  std::vector<Integer> residues;
  std::string detail;
  for (unsigned long n : {2UL, 6UL}) {
    Rational q = (Rational(1) - Rational(ipow(p, n - 1))) * bernoulli(n) / Rational(n);
    q.canonicalize();
    if (valuation(q, p) < 0) return make_result(false, "non-integral value " + to_string(q));
    const Integer residue = mod(q.get_num() * inverse_mod(q.get_den(), p).value(), p);
    residues.push_back(residue);
    detail += (detail.empty() ? "" : ", ") + to_string(q) + " = " + residue.get_str() + " mod 5";
  }
  return make_result(residues[0] == residues[1], detail);
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria{
      {1, "Bernoulli identities", check_bernoulli_identities},
      {2, "Teichmuller character", check_teichmuller},
      {3, "conductor machinery", check_conductors},
      {4, "generalized Bernoulli numbers", check_generalized_bernoulli},
      {5, "distribution compatibility of E_c", check_distribution},
      {6, "measure boundedness", check_boundedness},
      {7, "locally constant integration", check_locally_constant},
      {8, "even-character limit", check_even_limit},
      {9, "unit-sum decay", check_unit_sum},
      {10, "interpolation at negative integers", check_interpolation},
      {11, "Kummer congruence", check_kummer},
  };
  return criteria;
}

SuiteReport run_suite(const SuiteProfile& profile, std::uint64_t seed,
                      const std::function<void(const CriterionResult&)>& on_result) {
  SuiteReport report{profile.name, seed, {}, true};
  for (const Criterion& criterion : acceptance_criteria()) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    try {
      result = criterion.run(profile, seed);
    } catch (const std::exception& e) {
      result = make_result(false, std::string("exception: ") + e.what());
    }
    result.id = criterion.id;
    result.name = criterion.name;
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.pass = report.pass && result.pass;
    if (on_result) on_result(result);
    report.criteria.push_back(std::move(result));
  }
  return report;
}

Json suite_report_to_json(const SuiteReport& report) {
  Json criteria = Json::array();
  for (const auto& c : report.criteria) {
    criteria.push_back(
        {{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"seconds", c.seconds}});
  }
  return Json{{"profile", report.profile}, {"seed", report.seed}, {"criteria", criteria}, {"pass", report.pass}};
}

}  // namespace lpadic

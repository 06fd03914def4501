#include "lpadic/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <numeric>
#include <ostream>

#include "lpadic/bernoulli.hpp"
#include "lpadic/genbernoulli.hpp"

namespace lpadic::cli {

namespace {

Integer parse_integer(const std::string& flag, const std::string& text) {
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0) throw UsageError(flag + ": '" + text + "' is not an integer");
  return out;
}

void require_odd_prime(const Integer& p) {
  if (p < 3 || !is_prime(p)) throw PreconditionViolation("p must be an odd prime");
}

// build_character, then moved up to level d p^m for the L-function commands.
DirichletCharacter character_at_level(const std::string& text, const Integer& p, const Integer& level, long prec) {
  DirichletCharacter chi = build_character(parse_character_spec(text), p, prec);
  if (level % chi.level() != 0) {
    throw PreconditionViolation("character of level " + chi.level().get_str() + " does not factor through d p^m = " +
                                level.get_str());
  }
  return change_level(chi, level);
}

struct RawArgs {
  long prec = 8;
  std::uint64_t seed = 0;
  bool json = true;
  std::string p;
  std::string d = "1";
  std::string c = "2";
  std::string character;
  unsigned long n = 0;
  unsigned long m = 1;
  unsigned long k = 0;
  unsigned long max_level = 3;
  std::size_t samples = 200;
  std::string variant = "integer";
  unsigned long jmin = 0;
  unsigned long jmax = 7;
  long target = 4;
  std::string sign;
  std::string profile = "fast";
};

void add_lp_options(CLI::App* sub, RawArgs& raw) {
  sub->add_option("--p", raw.p, "odd prime")->required();
  sub->add_option("--d", raw.d, "tame level, coprime to p")->capture_default_str();
  sub->add_option("--m", raw.m, "exponent of p in the level of chi")->capture_default_str();
  sub->add_option("--char", raw.character, "triv | omega^<k> | table:<path>")->required();
  sub->add_option("--c", raw.c, "auxiliary integer, coprime to d p")->capture_default_str();
  sub->add_option("--jmin", raw.jmin, "first summation level")->capture_default_str();
  sub->add_option("--jmax", raw.jmax, "last summation level")->capture_default_str();
  sub->add_option("--target", raw.target, "valuation threshold T")->capture_default_str();
}

LpParams build_lp_params(const RawArgs& raw) {
  const Integer p = parse_integer("--p", raw.p);
  require_odd_prime(p);
  const BernoulliParams measure(p, parse_integer("--d", raw.d), parse_integer("--c", raw.c));
  if (raw.m < 1) throw PreconditionViolation("m must be at least 1");
  const DirichletCharacter chi = character_at_level(raw.character, p, measure.modulus(raw.m), raw.prec);
  return LpParams(measure, raw.m, chi, raw.prec, raw.jmin, raw.jmax, raw.target);
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"p-adic L-functions via the Bernoulli measure", "lpadic"};
  RawArgs raw;
  app.add_option("--prec", raw.prec, "relative p-adic precision")->capture_default_str();
  app.add_option("--seed", raw.seed, "seed for randomized sweeps")->capture_default_str();
  app.add_flag("--json", raw.json, "JSON output (always on)");
  app.require_subcommand(1);

  auto* bern = app.add_subcommand("bernoulli", "B_n and the coefficients of B_n(X)");
  bern->add_option("--n", raw.n, "index")->required();

  auto* gen = app.add_subcommand("genbernoulli", "generalized Bernoulli number B_{n,chi}");
  gen->add_option("--p", raw.p, "odd prime")->required();
  gen->add_option("--char", raw.character, "triv | omega^<k> | table:<path>")->required();
  gen->add_option("--n", raw.n, "index")->required();

  auto* info = app.add_subcommand("char-info", "level, conductor, parity and values of a character");
  info->add_option("--p", raw.p, "odd prime")->required();
  info->add_option("--char", raw.character, "triv | omega^<k> | table:<path>")->required();

  auto* measure = app.add_subcommand("measure-check", "compatibility and boundedness sweeps for E_c");
  measure->add_option("--p", raw.p, "odd prime")->required();
  measure->add_option("--d", raw.d, "tame level, coprime to p")->capture_default_str();
  measure->add_option("--c", raw.c, "auxiliary integer, coprime to d p")->capture_default_str();
  measure->add_option("--max-level", raw.max_level, "highest level swept")->capture_default_str();
  measure->add_option("--samples", raw.samples, "random cylinder functions")->capture_default_str();
  measure->add_option("--variant", raw.variant, "integer | division (diagnostic)")
      ->check(CLI::IsMember({"integer", "division"}))
      ->capture_default_str();

  auto* lp = app.add_subcommand("lp-eval", "integrate chi omega^{-1} <a>^k against E_c");
  add_lp_options(lp, raw);
  lp->add_option("--weight-k", raw.k, "weight exponent k")->required();

  auto* verify = app.add_subcommand("verify", "compare L_p at weight n-1 with the special value");
  add_lp_options(verify, raw);
  verify->add_option("--n", raw.n, "negative integer index, n >= 2")->required();
  verify->add_option("--sign", raw.sign, "pin the sign (+ or -)")->check(CLI::IsMember({"+", "-"}));

  auto* suite = app.add_subcommand("suite", "run the acceptance checks");
  suite->add_option("--profile", raw.profile, "fast | full")
      ->check(CLI::IsMember({"fast", "full"}))
      ->capture_default_str();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    const CLI::App* target = parsed.empty() ? &app : parsed.front();
    throw HelpRequested(target->help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Command command{GlobalOptions{raw.prec, raw.seed}, BernoulliCmd{0}};
  if (raw.prec < 1) throw UsageError("--prec must be positive");

  if (bern->parsed()) {
    command.body = BernoulliCmd{raw.n};
  } else if (gen->parsed() || info->parsed()) {
    const Integer p = parse_integer("--p", raw.p);
    require_odd_prime(p);
    DirichletCharacter chi = build_character(parse_character_spec(raw.character), p, raw.prec);
    if (gen->parsed()) {
      command.body = GenBernoulliCmd{raw.character, std::move(chi), raw.n};
    } else {
      command.body = CharInfoCmd{raw.character, std::move(chi)};
    }
  } else if (measure->parsed()) {
    const Integer p = parse_integer("--p", raw.p);
    require_odd_prime(p);
    const BernoulliParams params(p, parse_integer("--d", raw.d), parse_integer("--c", raw.c));
    const auto variant =
        raw.variant == "division" ? DistributionVariant::RationalDivision : DistributionVariant::IntegerInverse;
    command.body = MeasureCheckCmd{params, raw.max_level, raw.samples, variant};
  } else if (lp->parsed()) {
    command.body = LpEvalCmd{raw.character, build_lp_params(raw), raw.k};
  } else if (verify->parsed()) {
    if (raw.n < 2) throw PreconditionViolation("n must be at least 2");
    std::optional<Sign> sign;
    if (!raw.sign.empty()) sign = parse_sign(raw.sign);
    command.body = VerifyCmd{raw.character, build_lp_params(raw), raw.n, sign};
  } else {
    command.body = SuiteCmd{suite_profile(raw.profile)};
  }
  return command;
}

namespace {

Json character_json(const DirichletCharacter& chi) {
  Json exponents = Json::object();
  for (Integer a = 0; a < chi.level(); ++a) {
    if (const auto e = chi.exponent_at(a)) exponents[a.get_str()] = *e;
  }
  long g = static_cast<long>(chi.order());
  for (long e : chi.exponents()) {
    if (e >= 0) g = std::gcd(g, e);
  }
  return Json{{"p", integer_to_json(chi.prime())},
              {"level", integer_to_json(chi.level())},
              {"conductor", integer_to_json(conductor(chi))},
              {"primitive", is_primitive(chi)},
              {"parity", to_string(parity(chi))},
              {"order", static_cast<long>(chi.order()) / g},
              {"generator", integer_to_json(chi.roots().generator())},
              {"zeta", padic_to_json(chi.roots().zeta())},
              {"exponents", exponents}};
}

struct Runner {
  const GlobalOptions& global;

  RunResult operator()(const BernoulliCmd& cmd) const {
    Json coefficients = Json::array();
    const RationalPolynomial poly = bernoulli_poly(cmd.n);
    for (unsigned long i = 0; i <= cmd.n; ++i) coefficients.push_back(to_string(poly.coefficient(i)));
    return {0, Json{{"n", cmd.n},
                    {"value", to_string(bernoulli(cmd.n))},
                    {"coefficients", coefficients},
                    {"polynomial", poly.to_string()}}};
  }

  RunResult operator()(const GenBernoulliCmd& cmd) const {
    const CyclotomicNumber exact = general_bernoulli_exact(cmd.chi, cmd.n);
    Json out{{"p", integer_to_json(cmd.chi.prime())},
             {"char", cmd.char_text},
             {"n", cmd.n},
             {"conductor", integer_to_json(conductor(cmd.chi))},
             {"exact", exact.to_string()},
             {"value", padic_to_json(exact.embed(cmd.chi.roots().zeta(), cmd.chi.relprec()))}};
    if (exact.is_rational()) out["rational"] = to_string(exact.rational_value());
    return {0, out};
  }

  RunResult operator()(const CharInfoCmd& cmd) const {
    Json out = character_json(cmd.chi);
    out["char"] = cmd.char_text;
    return {0, out};
  }

  RunResult operator()(const MeasureCheckCmd& cmd) const {
    constexpr std::size_t shown = 20;
    const auto compat = compatibility_sweep(cmd.params, cmd.max_level, cmd.variant);
    Integer checked = 0;
    for (unsigned long m = 0; m <= cmd.max_level; ++m) checked += cmd.params.modulus(m);
    Json compat_items = Json::array();
    for (std::size_t i = 0; i < std::min(shown, compat.size()); ++i) {
      compat_items.push_back(compatibility_failure_to_json(compat[i]));
    }
    std::mt19937_64 rng(global.seed);
    const auto bounded = boundedness_sweep(cmd.params, cmd.max_level, cmd.samples, global.prec, rng);
    Json bound_items = Json::array();
    for (std::size_t i = 0; i < std::min(shown, bounded.size()); ++i) {
      bound_items.push_back(boundedness_failure_to_json(bounded[i]));
    }
    const bool pass = compat.empty() && bounded.empty();
    Json out{{"p", integer_to_json(cmd.params.p())},
             {"d", integer_to_json(cmd.params.d())},
             {"c", integer_to_json(cmd.params.c())},
             {"max_level", cmd.max_level},
             {"variant", cmd.variant == DistributionVariant::IntegerInverse ? "integer" : "division"},
             {"compatibility",
              {{"checked", integer_to_json(checked)}, {"failure_count", compat.size()}, {"failures", compat_items}}},
             {"boundedness",
              {{"samples", cmd.samples},
               {"K", to_string(measure_bound_constant(cmd.params))},
               {"failure_count", bounded.size()},
               {"failures", bound_items}}},
             {"pass", pass}};
    return {pass ? 0 : 1, out};
  }

  RunResult operator()(const LpEvalCmd& cmd) const {
    const EvalReport report = p_adic_L(cmd.params, Weight{cmd.k});
    return {report.converged ? 0 : 1, eval_report_to_json(report)};
  }

  RunResult operator()(const VerifyCmd& cmd) const {
    const InterpolationReport report = verify_interpolation(cmd.params, cmd.n, cmd.sign);
    return {report.pass ? 0 : 1, interpolation_report_to_json(report)};
  }

  RunResult operator()(const SuiteCmd& cmd) const {
    const SuiteReport report = run_suite(cmd.profile, global.seed);
    return {report.pass ? 0 : 1, suite_report_to_json(report)};
  }
};

}  // namespace

RunResult run(const Command& command) { return std::visit(Runner{command.global}, command.body); }

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const RunResult result = run(parse_args(args));
    out << result.output.dump(2) << '\n';
    return result.exit_code;
  } catch (const HelpRequested& help) {
    out << help.what();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace lpadic::cli

#include <doctest.h>

#include <sstream>

#include "lpadic/cli.hpp"

using namespace lpadic;
using lpadic::cli::main_entry;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data_path(const std::string& name) { return std::string(LPADIC_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("bernoulli") {
  const Outcome r = invoke({"bernoulli", "--n", "12"});
  CHECK(r.code == 0);
  CHECK(r.json().at("value") == "-691/2730");
  CHECK(r.json().at("coefficients").size() == 13);
  CHECK(invoke({"bernoulli", "--n", "1"}).json().at("value") == "-1/2");
}

TEST_CASE("genbernoulli and char-info") {
  const Outcome gen = invoke({"genbernoulli", "--p", "5", "--char", "omega^2", "--n", "2"});
  CHECK(gen.code == 0);
  CHECK(gen.json().at("conductor") == 5);
  CHECK(gen.json().at("rational") == "4/5");

  const Outcome info = invoke({"char-info", "--p", "5", "--char", "omega^2"});
  CHECK(info.code == 0);
  CHECK(info.json().at("parity") == "even");
  CHECK(info.json().at("order") == 2);
  CHECK(info.json().at("generator") == 2);

  const Outcome table = invoke({"char-info", "--p", "5", "--char", "table:" + data_path("quadratic_mod_15.json")});
  CHECK(table.code == 0);
  CHECK(table.json().at("conductor") == 15);
  CHECK(table.json().at("parity") == "odd");

  const Outcome wrong_prime = invoke({"char-info", "--p", "3", "--char", "table:" + data_path("quadratic_mod_15.json")});
  CHECK(wrong_prime.code == 2);
  CHECK(wrong_prime.err.find("expected 3") != std::string::npos);

  const Outcome broken = invoke({"char-info", "--p", "5", "--char", "table:" + data_path("not_multiplicative.json")});
  CHECK(broken.code == 2);
  CHECK(broken.err.find("not multiplicative") != std::string::npos);
  CHECK(invoke({"char-info", "--p", "3", "--char", "table:/nonexistent.json"}).code == 2);
  CHECK(invoke({"char-info", "--p", "3", "--char", "chi"}).code == 2);
}

TEST_CASE("measure-check") {
  const Outcome ok = invoke({"measure-check", "--p", "3", "--c", "2", "--max-level", "2", "--samples", "20"});
  CHECK(ok.code == 0);
  CHECK(ok.json().at("pass") == true);
  CHECK(ok.json().at("boundedness").at("K") == "3");

  const Outcome division =
      invoke({"measure-check", "--p", "3", "--c", "2", "--max-level", "2", "--samples", "5", "--variant", "division"});
  CHECK(division.code == 1);
  CHECK(division.json().at("compatibility").at("failure_count") > 0);
}

TEST_CASE("lp-eval and verify") {

  std::vector<std::string> lp{"--prec", "12", "lp-eval", "--p", "5", "--char", "omega^2", "--c", "2", "--weight-k", "1"};
  const Outcome eval = invoke(lp);
  CHECK(eval.code == 0);
  const EvalReport report = eval_report_from_json(eval.json(), 5);
  CHECK(report.converged);
  CHECK(report.tail_valuation >= 4);

  const Outcome verify = invoke({"--prec", "12", "verify", "--p", "5", "--char", "omega^2", "--c", "2", "--n", "2"});
  CHECK(verify.code == 0);
  const InterpolationReport ir = interpolation_report_from_json(verify.json(), 5);
  CHECK(ir.pass);
  CHECK(ir.sign == Sign::Plus);
  CHECK(ir.valuation_of_difference >= 4);

  const Outcome minus =
      invoke({"--prec", "12", "verify", "--p", "5", "--char", "omega^2", "--c", "2", "--n", "2", "--sign", "-"});
  CHECK(minus.code == 1);
  CHECK(minus.json().at("pass") == false);

  // trivial character is lifted to level d p^m
  CHECK(invoke({"--prec", "12", "verify", "--p", "3", "--char", "triv", "--c", "2", "--n", "4"}).code == 0);
}

TEST_CASE("errors and exit codes") {
  const Outcome even_p = invoke({"verify", "--p", "4", "--char", "triv", "--n", "2"});
  CHECK(even_p.code == 2);
  CHECK(even_p.err.find("p must be an odd prime") != std::string::npos);

  const Outcome odd = invoke({"verify", "--p", "5", "--char", "omega^1", "--n", "2"});
  CHECK(odd.code == 2);
  CHECK(odd.err.find("chi must be even") != std::string::npos);

  CHECK(invoke({"verify", "--p", "5", "--char", "omega^2", "--n", "1"}).code == 2);
  CHECK(invoke({"verify", "--p", "5", "--char", "omega^2", "--c", "5", "--n", "2"}).code == 2);
  CHECK(invoke({"lp-eval", "--p", "5", "--char", "omega^2", "--weight-k", "1", "--target", "20"}).code == 2);

  const Outcome unknown = invoke({"bernoulli", "--n", "3", "--bogus"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("usage error") != std::string::npos);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"bernoulli", "--n", "x"}).code == 2);
  CHECK(invoke({"verify", "--p", "5", "--char", "omega^2", "--n", "2", "--sign", "0"}).code == 2);

  const Outcome help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("parse_args") {
  const auto cmd = cli::parse_args({"--seed", "9", "--prec", "6", "measure-check", "--p", "7", "--d", "2", "--c", "3"});
  CHECK(cmd.global.seed == 9);
  CHECK(cmd.global.prec == 6);
  const auto& body = std::get<cli::MeasureCheckCmd>(cmd.body);
  CHECK(body.params.d() == 2);
  CHECK(body.max_level == 3);
  CHECK(body.samples == 200);

  const auto lp = cli::parse_args({"lp-eval", "--p", "5", "--char", "omega^2", "--weight-k", "0"});
  const auto& lp_body = std::get<cli::LpEvalCmd>(lp.body);
  CHECK(lp_body.params.m() == 1);
  CHECK(lp_body.params.j_max() == 7);
  CHECK(lp_body.params.target_valuation() == 4);
  CHECK(lp_body.params.chi().level() == 5);
  CHECK_THROWS_AS(cli::parse_args({"suite", "--profile", "slow"}), cli::UsageError);
}

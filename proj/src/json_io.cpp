#include "lpadic/json_io.hpp"

#include "lpadic/errors.hpp"

namespace lpadic {

Json integer_to_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("not an integer: " + j.get<std::string>());
    return out;
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

Json padic_to_json(const PadicNum& x) {
  switch (x.kind()) {
    case PadicNum::Kind::ExactZero:
      return Json{{"zero", true}};
    case PadicNum::Kind::PrecisionExhaustedZero:
      return Json{{"zero_to_precision", *x.absolute_precision()}};
    case PadicNum::Kind::Finite:
      break;
  }
  return Json{{"p", integer_to_json(x.prime())},
              {"valuation", x.valuation()},
              {"unit", integer_to_json(x.unit())},
              {"relprec", x.relprec()}};
}

PadicNum padic_from_json(const Json& j, const Integer& p) {
  if (!j.is_object()) throw InvalidArgument("p-adic number must be a JSON object");
  if (j.contains("zero")) {
    if (j.at("zero") != true) throw InvalidArgument("\"zero\" must be true");
    return PadicNum::exact_zero(p);
  }
  if (j.contains("zero_to_precision")) return PadicNum::exhausted_zero(p, j.at("zero_to_precision").get<long>());
  const Integer prime = integer_from_json(j.at("p"));
  if (prime != p) throw InvalidArgument("p-adic number over " + prime.get_str() + ", expected " + p.get_str());
  return PadicNum::from_parts(prime, j.at("valuation").get<long>(), integer_from_json(j.at("unit")),
                              j.at("relprec").get<long>());
}

Json eval_report_to_json(const EvalReport& report) {
  Json increments = Json::array();
  for (const auto& [level, valuation] : report.increments) {
    increments.push_back({{"j", level}, {"valuation", valuation}});
  }
  return Json{{"value", padic_to_json(report.value)},
              {"level_used", report.level_used},
              {"converged", report.converged},
              {"tail_valuation", report.tail_valuation},
              {"increments", increments}};
}

EvalReport eval_report_from_json(const Json& j, const Integer& p) {
  EvalReport report{padic_from_json(j.at("value"), p), j.at("level_used").get<unsigned long>(),
                    j.at("converged").get<bool>(), j.at("tail_valuation").get<long>(), {}};
  for (const auto& item : j.at("increments")) {
    report.increments.emplace_back(item.at("j").get<unsigned long>(), item.at("valuation").get<long>());
  }
  return report;
}

Json interpolation_report_to_json(const InterpolationReport& report) {
  return Json{{"lhs", padic_to_json(report.lhs)},
              {"rhs", padic_to_json(report.rhs)},
              {"sign", to_string(report.sign)},
              {"valuation_of_difference", report.valuation_of_difference},
              {"pass", report.pass},
              {"n", report.n},
              {"converged", report.converged},
              {"level_used", report.level_used},
              {"valuation_minus", report.valuation_minus},
              {"valuation_plus", report.valuation_plus}};
}

InterpolationReport interpolation_report_from_json(const Json& j, const Integer& p) {
  InterpolationReport report{j.at("n").get<unsigned long>(), padic_from_json(j.at("lhs"), p),
                             padic_from_json(j.at("rhs"), p)};
  report.converged = j.at("converged").get<bool>();
  report.level_used = j.at("level_used").get<unsigned long>();
  report.valuation_minus = j.at("valuation_minus").get<long>();
  report.valuation_plus = j.at("valuation_plus").get<long>();
  report.sign = parse_sign(j.at("sign").get<std::string>());
  report.valuation_of_difference = j.at("valuation_of_difference").get<long>();
  report.pass = j.at("pass").get<bool>();
  return report;
}

Json compatibility_failure_to_json(const CompatibilityFailure& f) {
  return Json{{"level", f.level},
              {"x", integer_to_json(f.x)},
              {"coarse", to_string(f.coarse)},
              {"refined", to_string(f.refined)}};
}

Json boundedness_failure_to_json(const BoundednessFailure& f) {
  return Json{{"level", f.level}, {"lhs", to_string(f.lhs)}, {"rhs", to_string(f.rhs)}};
}

}  // namespace lpadic

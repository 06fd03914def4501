#pragma once

#include <json.hpp>

#include "lpadic/lfunction.hpp"
#include "lpadic/measure.hpp"
#include "lpadic/padic.hpp"

namespace lpadic {

using Json = nlohmann::json;

/// Integers are JSON numbers when they fit in 64 bits and decimal strings
/// otherwise; both forms are accepted on input.
Json integer_to_json(const Integer& n);
Integer integer_from_json(const Json& j);

/// {"p","valuation","unit","relprec"}, {"zero": true} or
/// {"zero_to_precision": k}. The zero forms carry no prime, so reading
/// them needs one.
Json padic_to_json(const PadicNum& x);
PadicNum padic_from_json(const Json& j, const Integer& p);

/// {"value","level_used","converged","tail_valuation","increments"}.
Json eval_report_to_json(const EvalReport& report);
EvalReport eval_report_from_json(const Json& j, const Integer& p);

/// {"lhs","rhs","sign","valuation_of_difference","pass"} plus the
/// convergence and both-sign details.
Json interpolation_report_to_json(const InterpolationReport& report);
InterpolationReport interpolation_report_from_json(const Json& j, const Integer& p);

Json compatibility_failure_to_json(const CompatibilityFailure& f);
Json boundedness_failure_to_json(const BoundednessFailure& f);

}  // namespace lpadic

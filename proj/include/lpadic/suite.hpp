#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lpadic/json_io.hpp"

namespace lpadic {

/// Sizes of the sweeps behind each acceptance check. "full" runs the stated
/// grids; "fast" shrinks the exhaustive sweeps for quick runs.
struct SuiteProfile {
  std::string name;
  unsigned long conductor_max_level = 100;
  unsigned long compatibility_max_level = 3;
  std::size_t boundedness_samples = 200;
  std::size_t cylinder_samples = 50;
  unsigned long interpolation_jmax = 7;
};

SuiteProfile suite_profile(const std::string& name);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  std::string profile;
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;
  bool pass = false;
};

using CriterionFn = std::function<CriterionResult(const SuiteProfile&, std::uint64_t seed)>;

struct Criterion {
  int id;
  std::string name;
  CriterionFn run;
};

/// The numbered acceptance checks, in order.
const std::vector<Criterion>& acceptance_criteria();

/// Runs every criterion; exceptions inside a check count as a failure with
/// the message as detail. on_result, when set, sees each result as it lands.
SuiteReport run_suite(const SuiteProfile& profile, std::uint64_t seed,
                      const std::function<void(const CriterionResult&)>& on_result = {});

Json suite_report_to_json(const SuiteReport& report);

}  // namespace lpadic

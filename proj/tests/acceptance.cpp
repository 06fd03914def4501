// Runs the numbered acceptance checks and prints one line per criterion.
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "lpadic/suite.hpp"

int main(int argc, char** argv) {
  const std::string profile = argc > 1 ? argv[1] : "full";
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 0;
  const lpadic::SuiteReport report =
      lpadic::run_suite(lpadic::suite_profile(profile), seed, [](const lpadic::CriterionResult& r) {
        std::cout << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " " << r.name << " (" << r.detail
                  << ")" << std::endl;
      });
  std::cout << (report.pass ? "all criteria passed" : "some criteria failed") << std::endl;
  return report.pass ? 0 : 1;
}

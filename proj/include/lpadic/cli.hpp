#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpadic/errors.hpp"
#include "lpadic/json_io.hpp"
#include "lpadic/lfunction.hpp"
#include "lpadic/suite.hpp"

namespace lpadic::cli {

/// Malformed command line: unknown flag, missing value, bad number.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// --help anywhere on the command line; carries the help text.
class HelpRequested : public Error {
 public:
  using Error::Error;
};

struct GlobalOptions {
  long prec = 8;
  std::uint64_t seed = 0;
};

struct BernoulliCmd {
  unsigned long n;
};

struct GenBernoulliCmd {
  std::string char_text;
  DirichletCharacter chi;
  unsigned long n;
};

struct CharInfoCmd {
  std::string char_text;
  DirichletCharacter chi;
};

struct MeasureCheckCmd {
  BernoulliParams params;
  unsigned long max_level;
  std::size_t samples;
  DistributionVariant variant;
};

struct LpEvalCmd {
  std::string char_text;
  LpParams params;
  unsigned long k;
};

struct VerifyCmd {
  std::string char_text;
  LpParams params;
  unsigned long n;
  std::optional<Sign> sign;
};

struct SuiteCmd {
  SuiteProfile profile;
};

using CommandBody =
    std::variant<BernoulliCmd, GenBernoulliCmd, CharInfoCmd, MeasureCheckCmd, LpEvalCmd, VerifyCmd, SuiteCmd>;

struct Command {
  GlobalOptions global;
  CommandBody body;
};

/// Parses and validates arguments (without the program name). Throws
/// UsageError for syntax problems, HelpRequested for --help, and the
/// library's errors for violated preconditions.
Command parse_args(const std::vector<std::string>& args);

struct RunResult {
  int exit_code;
  Json output;
};

/// Exit code 0 on success, 1 when a check or verification fails.
RunResult run(const Command& command);

/// parse_args + run with JSON on out and diagnostics on err; returns the
/// process exit code (2 on usage or validation errors).
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpadic::cli

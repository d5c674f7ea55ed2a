#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gtrace/errors.hpp"
#include "gtrace/io.hpp"

namespace gtrace::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::size_t kDefaultPathBudget = 100000;

class UsageError : public InputError {
 public:
  using InputError::InputError;
};

/// --help was given; what() is the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Command {
  enum class Kind { Info, Traces, KTheory, Boundary, Star, KPositive, Certify };
  Kind kind = Kind::Info;
  std::string graph_path;

  // traces
  bool extreme = false;
  std::optional<std::string> check_path;
  std::optional<std::string> minimize;

  // boundary
  std::optional<std::size_t> depth;
  bool verify = false;
  std::size_t budget = kDefaultPathBudget;

  // star
  std::string op;
  std::optional<std::string> element_path;
  std::optional<std::string> other_path;
  std::optional<long> degree;
  std::optional<std::string> vertex;

  // shared
  std::optional<std::string> measure_path;
  std::optional<std::string> vector;
};

const char* to_string(Command::Kind kind);

/// `args` excludes the program name. Throws UsageError naming the offending
/// flag or file, HelpRequested for --help.
Command parse_command(const std::vector<std::string>& args);

struct Outcome {
  Json document;  // null unless exit_code == 0
  int exit_code = 0;
  std::string diagnostic;
};

/// Exit codes: 0 success (including empty trace spaces), 1 input or
/// validation error, 2 path budget exhausted.
Outcome execute(const Command& cmd);

/// Full front end: parses, executes, writes the document to `out` and
/// diagnostics to `err`, returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gtrace::cli

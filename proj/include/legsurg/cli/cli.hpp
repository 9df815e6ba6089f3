#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "legsurg/algebra/rational.hpp"

namespace legsurg::cli {

struct BrieskornCmd {
  long n;
};
struct DistinguishCmd {
  std::string input;
};
struct SlopesCmd {
  long n;
  long n1;
  long n2;
  long n3;
};
struct HomologyCmd {
  // Exactly one source: a linking-matrix file or the four monodromy entries.
  std::optional<std::string> input;
  std::optional<std::array<long, 4>> mapping_torus;
  std::optional<std::vector<long>> class_vector;
};
struct VerifyHandleCmd {
  std::size_t samples = 20;
  algebra::Rational a = algebra::Rational(2);
};
struct SnfCmd {
  std::string input;
};

struct Command {
  std::variant<BrieskornCmd, DistinguishCmd, SlopesCmd, HomologyCmd, VerifyHandleCmd, SnfCmd> action;
  bool pretty = false;
};

// Malformed command line; the message names the offending flag.
class ArgError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Thrown for --help; carries the help text.
class HelpRequested : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// `args` excludes the program name.
Command parse_args(const std::vector<std::string>& args);

// Writes the JSON document (or, with --pretty, a table) to `out`.
// Returns 0 on success, 1 when a verification item fails or mathematical input
// violates a precondition, 2 for malformed files.
int run(const Command& cmd, std::ostream& out);

// parse_args + run with every failure turned into an {"error": ...} document.
int main_entry(const std::vector<std::string>& args, std::ostream& out);

}  // namespace legsurg::cli

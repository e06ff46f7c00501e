#pragma once

// Command-line front end for the `lrs` tool.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lrs/error.hpp"
#include "lrs/fields.hpp"
#include "lrs/poly.hpp"
#include "lrs/seq.hpp"
#include "lrs/spectrum.hpp"

namespace lrs::cli {

enum class Command { kWedge, kFactor, kMul, kVerify, kTable, kBatch };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Malformed command line; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Invocation {
  Command command = Command::kMul;
  std::string field_spec;
  std::optional<FieldDescriptor> field;
  std::vector<std::string> poly_texts;
  std::vector<Polynomial> polys;
  /// wedge and table only.
  std::uint64_t characteristic = 0;
  /// wedge: i, j. table: rows, columns.
  std::vector<std::uint64_t> integers;
  std::string batch_path;

  std::uint64_t seed = 0;
  bool json = false;
  bool explain = false;
  std::uint64_t cap = kDefaultTupleCap;
  std::uint64_t budget = kDefaultOracleBudget;
  unsigned jobs = 1;
};

/// args excludes the program name. `env_seed` is the value of LRS_SEED, if
/// set; an explicit --seed wins over it. Throws UsageError with a message
/// naming the offending token (and a caret line for expression errors).
Invocation parse_invocation(const std::vector<std::string>& args,
                            const std::optional<std::string>& env_seed = std::nullopt);

/// Executes a validated invocation and returns the exit code.
int run(const Invocation& inv, std::ostream& out, std::ostream& err);

/// parse_invocation + run, including --help and usage diagnostics.
int main_entry(const std::vector<std::string>& args, const std::optional<std::string>& env_seed, std::ostream& out,
               std::ostream& err);

/// "x^2*(x+1)": the factorization of p as a product that re-parses to p.
std::string factored_string(const Polynomial& p, std::uint64_t seed = 0);

}  // namespace lrs::cli

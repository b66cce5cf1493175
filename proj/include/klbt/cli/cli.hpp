#pragma once

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace klbt::cli {

// Reports are ordered JSON objects: keys keep insertion order, so identical
// configurations serialize to identical bytes.
using Json = nlohmann::ordered_json;

enum class Command { Dim, Verify, KlLift, FiniteModel, DimRank };

struct RunConfig {
  Command command = Command::Dim;
  int n = 2;
  std::uint32_t q = 2;
  int k = 1;
  // dim: "auto" | "subset" | "aggregate"; dim-rank: "exact" | "specialized".
  std::string mode = "auto";
  // verify: "btalg" | "hecke" | "kl" | "monodromic" | "finite".
  std::string suite;
  std::uint64_t seed = 1;
  std::string format = "json";  // "json" | "csv"
  std::string out;              // empty: standard output
  int threads = 1;
  std::size_t ceiling = 1000;   // finite model |X| ceiling
  int points = 3;               // dim-rank specializations
  int trials = 120;             // pi_consistency word pairs
};

// Invalid arguments or bounds; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

// Checks bounds for the selected command; throws UsageError.
void validate(const RunConfig& config);

struct Report {
  Json json;
  bool pass = true;  // false -> exit code 1
};

Report cmd_dim(const RunConfig& config);
Report cmd_verify(const RunConfig& config);
Report cmd_kl_lift(const RunConfig& config);
Report cmd_finite_model(const RunConfig& config);
Report cmd_dim_rank(const RunConfig& config);
Report dispatch(const RunConfig& config);

// Serializations. CSV flattens the report into one table per command.
std::string to_json_text(const Json& report);
std::string to_csv(const Json& report);

// Full program: parses argv, runs, writes the report, returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace klbt::cli

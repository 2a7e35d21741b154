#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace zetaforms::cli {

enum class Command { kForms, kVerify, kRates, kBound, kIntegral };
enum class OutputFormat { kJson, kCsv };

inline constexpr long kDefaultPrecisionBits = 256;
inline constexpr const char* kPrecisionEnvVar = "ZETAFORMS_PRECISION_BITS";

/// Exit-code contract shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitCheckFailed = 2,
  kExitResource = 3,
};

struct RunConfig {
  Command command = Command::kForms;
  int a = 3;
  std::optional<int> r;  // defaults to r_default(a)
  int n = 0;
  int n_max = 0;
  std::string z = "1";
  long precision_bits = kDefaultPrecisionBits;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 7;
  OutputFormat output = OutputFormat::kJson;
  std::optional<std::string> out_path;

  // bound
  bool a_given = false;
  std::optional<std::string> grid;  // "1e3:1e9", one point per decade
  std::optional<double> find_dim;

  // verify
  bool inject_mutation = false;

  [[nodiscard]] int resolved_r() const;
};

/// Default precision, honouring ZETAFORMS_PRECISION_BITS when set.
long default_precision_bits();

}  // namespace zetaforms::cli

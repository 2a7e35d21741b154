#include "zetaforms/cli/run_config.hpp"

#include <cstdlib>
#include <string>

#include "zetaforms/asymptotics/bounds.hpp"
#include "zetaforms/errors.hpp"

namespace zetaforms::cli {

int RunConfig::resolved_r() const { return r ? *r : r_default(a); }

long default_precision_bits() {
  const char* env = std::getenv(kPrecisionEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultPrecisionBits;
  try {
    std::size_t used = 0;
    const long bits = std::stol(env, &used);
    if (used != std::string(env).size() || bits < 16) throw DomainError("");
    return bits;
  } catch (const std::exception&) {
    throw DomainError(std::string(kPrecisionEnvVar) + " must be an integer >= 16, got '" + env + "'");
  }
}

}  // namespace zetaforms::cli

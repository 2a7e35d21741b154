#include "zetaforms/reals/mc_integral.hpp"

#include <algorithm>
#include <cmath>
#include <execution>
#include <numeric>
#include <vector>

#include "zetaforms/errors.hpp"
#include "zetaforms/reals/real.hpp"

namespace zetaforms {
namespace {

constexpr std::uint64_t kBlockSize = 1 << 15;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Running mean and sum of squared deviations (Welford / Chan).
struct Moments {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    count += 1.0;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0.0) return;
    const double total = count + o.count;
    const double delta = o.mean - mean;
    mean += delta * o.count / total;
    m2 += o.m2 + delta * delta * count * o.count / total;
    count = total;
  }
};

}  // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t bits = splitmix64(splitmix64(seed) ^ counter);
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

McEstimate mc_integral(const FormParams& params, const Rational& z, std::uint64_t samples,
                       std::uint64_t seed) {
  params.validate();
  if (samples < 10'000) throw DomainError("mc_integral needs at least 10^4 samples");
  if (z < Rational(1)) throw DomainError("mc_integral needs z >= 1, got " + z.str());

  const int dims = params.a + 1;
  const double n = params.n;
  const double r = params.r;
  const double zd = Real(z, 64).to_double();
  // log of ((2r+1)n+1)!/n!^{2r+1} z^{(r+1)n+2}
  const double log_prefactor = std::lgamma((2.0 * r + 1.0) * n + 2.0) -
                               (2.0 * r + 1.0) * std::lgamma(n + 1.0) +
                               ((r + 1.0) * n + 2.0) * std::log(zd);

  const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<Moments> partial(blocks);
  std::vector<std::uint64_t> ids(blocks);
  std::iota(ids.begin(), ids.end(), 0);
  std::for_each(std::execution::par, ids.begin(), ids.end(), [&](std::uint64_t b) {
    const std::uint64_t begin = b * kBlockSize;
    const std::uint64_t end = std::min(samples, begin + kBlockSize);
    Moments m;
    for (std::uint64_t s = begin; s < end; ++s) {
      double product = 1.0;
      double log_weight = 0.0;  // sum r log x + log(1 - x)
      for (int d = 0; d < dims; ++d) {
        const double x = counter_uniform(seed, s * static_cast<std::uint64_t>(dims) + d);
        product *= x;
        log_weight += r * std::log(x) + std::log1p(-x);
      }
      const double log_gap = std::log(zd - product);
      const double log_value =
          n * (log_weight - (2.0 * r + 1.0) * log_gap) - 2.0 * log_gap + log_prefactor;
      m.add(std::exp(log_value));
    }
    partial[b] = m;
  });

  Moments total;
  for (const auto& m : partial) total.merge(m);
  McEstimate out;
  out.samples = samples;
  out.estimate = total.mean;
  out.standard_error = std::sqrt(total.m2 / (total.count - 1.0) / total.count);
  return out;
}

}  // namespace zetaforms

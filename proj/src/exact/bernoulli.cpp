#include "zetaforms/exact/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace zetaforms {

Rational bernoulli(std::size_t n) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  // sum_{k=0}^{m} C(m+1, k) B_k = 0
  while (table.size() <= n) {
    const std::size_t m = table.size();
    if (m > 1 && m % 2 == 1) {
      table.emplace_back(0);
      continue;
    }
    Rational acc;
    BigInt binom = 1;  // C(m+1, 0)
    for (std::size_t k = 0; k < m; ++k) {
      if (!table[k].is_zero()) acc += Rational(binom) * table[k];
      binom = binom * static_cast<unsigned long>(m + 1 - k) / static_cast<unsigned long>(k + 1);
    }
    table.push_back(-acc / Rational(static_cast<long>(m + 1)));
  }
  return table[n];
}

}  // namespace zetaforms

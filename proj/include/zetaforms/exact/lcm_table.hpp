#pragma once

#include <cstddef>
#include <deque>
#include <shared_mutex>

#include "zetaforms/exact/rational.hpp"

namespace zetaforms {

/// Monotone memo of d_n = lcm(1, ..., n), with d_0 = 1.
///
/// Entries are only ever appended, so references returned by `at` stay valid
/// for the lifetime of the table.  Concurrent readers see a consistent prefix;
/// growth takes an exclusive lock.
class LcmTable {
 public:
  LcmTable();

  const BigInt& at(std::size_t n);
  [[nodiscard]] std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::deque<BigInt> values_;
};

/// d_n from the process-wide table.
const BigInt& lcm_upto(std::size_t n);

}  // namespace zetaforms

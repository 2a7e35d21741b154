#include "zetaforms/exact/lcm_table.hpp"

#include <mutex>

namespace zetaforms {

LcmTable::LcmTable() { values_.emplace_back(1); }

const BigInt& LcmTable::at(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < values_.size()) return values_[n];
  }
  std::unique_lock lock(mutex_);
  while (values_.size() <= n) {
    BigInt next;
    mpz_lcm_ui(next.get_mpz_t(), values_.back().get_mpz_t(), values_.size());
    values_.push_back(std::move(next));
  }
  return values_[n];
}

std::size_t LcmTable::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

const BigInt& lcm_upto(std::size_t n) {
  static LcmTable table;
  return table.at(n);
}

}  // namespace zetaforms

#include "semiweight/intset.hpp"

#include <algorithm>

namespace semiweight {

void IntSet::clear_tail() {
  if (words_.empty()) return;
  int used = static_cast<int>(limit_ % 64) + 1;
  if (used < 64) words_.back() &= (std::uint64_t{1} << used) - 1;
}

void IntSet::set_range(std::int64_t lo, std::int64_t hi) {
  lo = std::max<std::int64_t>(lo, 0);
  hi = std::min(hi, limit_);
  for (std::int64_t x = lo; x <= hi; ++x) set(x);
}

std::int64_t IntSet::count_range(std::int64_t lo, std::int64_t hi) const {
  lo = std::max<std::int64_t>(lo, 0);
  hi = std::min(hi, limit_);
  std::int64_t n = 0;
  for (std::int64_t x = lo; x <= hi; ++x) n += test(x) ? 1 : 0;
  return n;
}

std::int64_t IntSet::max_value() const {
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (words_[i]) {
      return static_cast<std::int64_t>(i * 64) + (63 - std::countl_zero(words_[i]));
    }
  }
  return -1;
}

std::vector<std::int64_t> IntSet::values() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count()));
  for_each([&](std::int64_t x) { out.push_back(x); });
  return out;
}

void IntSet::or_shifted(const IntSet& other, std::int64_t shift) {
  const std::size_t q = static_cast<std::size_t>(shift / 64);
  const int r = static_cast<int>(shift % 64);
  const std::size_t n = words_.size();
  for (std::size_t i = 0; i < other.words_.size(); ++i) {
    std::uint64_t w = other.words_[i];
    if (!w) continue;
    std::size_t j = i + q;
    if (j < n) words_[j] |= w << r;
    if (r != 0 && j + 1 < n) words_[j + 1] |= w >> (64 - r);
  }
  clear_tail();
}

IntSet sumset_bits(const IntSet& a, const IntSet& b, std::int64_t cap) {
  std::int64_t bound = cap;
  if (bound < 0) {
    std::int64_t ma = a.max_value(), mb = b.max_value();
    if (ma < 0 || mb < 0) return IntSet(-1);
    bound = ma + mb;
  }
  IntSet out(bound);
  b.for_each([&](std::int64_t x) {
    if (x <= bound) out.or_shifted(a, x);
  });
  return out;
}

}  // namespace semiweight

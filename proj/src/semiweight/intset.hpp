#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace semiweight {

// Dense bit set over the integer universe [0, limit]. The workhorse behind
// membership queries, closure checks and shift-or sumsets.
class IntSet {
 public:
  IntSet() = default;
  explicit IntSet(std::int64_t limit)
      : limit_(limit), words_(limit >= 0 ? static_cast<std::size_t>(limit / 64 + 1) : 0) {}

  std::int64_t limit() const { return limit_; }

  bool test(std::int64_t x) const {
    if (x < 0 || x > limit_) return false;
    return (words_[static_cast<std::size_t>(x >> 6)] >> (x & 63)) & 1u;
  }

  void set(std::int64_t x) {
    words_[static_cast<std::size_t>(x >> 6)] |= std::uint64_t{1} << (x & 63);
  }

  void reset(std::int64_t x) {
    words_[static_cast<std::size_t>(x >> 6)] &= ~(std::uint64_t{1} << (x & 63));
  }

  void set_range(std::int64_t lo, std::int64_t hi);  // inclusive, clipped to limit

  std::int64_t count() const {
    std::int64_t n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
  }

  // Number of set bits in [lo, hi] (inclusive), clipped to the universe.
  std::int64_t count_range(std::int64_t lo, std::int64_t hi) const;

  // -1 when empty.
  std::int64_t max_value() const;

  std::vector<std::int64_t> values() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<std::int64_t>(i * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  // this |= (other << shift), clipped to this->limit(). shift >= 0.
  void or_shifted(const IntSet& other, std::int64_t shift);

  bool operator==(const IntSet& o) const {
    return limit_ == o.limit_ && words_ == o.words_;
  }

 private:
  std::int64_t limit_ = -1;
  std::vector<std::uint64_t> words_;

  void clear_tail();
};

// {a + b : a in A, b in B, a + b <= cap}. cap < 0 means "no cap" (bounded by
// max(A) + max(B)).
IntSet sumset_bits(const IntSet& a, const IntSet& b, std::int64_t cap);

}  // namespace semiweight

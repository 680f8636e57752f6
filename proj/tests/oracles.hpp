// Independent brute-force oracles used to freeze expected values. Everything
// here is deliberately naive and shares no code with the library paths it
// checks.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using std::int64_t;

// Members of the closure of {0} u gens up to `bound`, by direct sieving.
inline std::vector<int64_t> closure_members(const std::vector<int64_t>& gens,
                                            int64_t bound) {
  std::vector<char> in(static_cast<std::size_t>(bound + 1), 0);
  in[0] = 1;
  for (int64_t x = 1; x <= bound; ++x)
    for (int64_t gen : gens)
      if (gen <= x && in[static_cast<std::size_t>(x - gen)]) {
        in[static_cast<std::size_t>(x)] = 1;
        break;
      }
  std::vector<int64_t> out;
  for (int64_t x = 0; x <= bound; ++x)
    if (in[static_cast<std::size_t>(x)]) out.push_back(x);
  return out;
}

inline std::vector<int64_t> gaps_from_generators(const std::vector<int64_t>& gens,
                                                 int64_t bound) {
  const auto members = closure_members(gens, bound);
  std::set<int64_t> mem(members.begin(), members.end());
  std::vector<int64_t> gaps;
  for (int64_t x = 1; x <= bound; ++x)
    if (!mem.count(x)) gaps.push_back(x);
  return gaps;
}

// Triple-loop sumset; cap < 0 means unbounded.
inline std::vector<int64_t> sumset(const std::vector<int64_t>& a,
                                   const std::vector<int64_t>& b, int64_t cap) {
  std::set<int64_t> out;
  for (int64_t x : a)
    for (int64_t y : b)
      if (cap < 0 || x + y <= cap) out.insert(x + y);
  return {out.begin(), out.end()};
}

inline std::vector<int64_t> n_fold_sums(const std::vector<int64_t>& set,
                                        int64_t n) {
  std::vector<int64_t> acc = set;
  for (int64_t i = 1; i < n; ++i) acc = sumset(acc, set, -1);
  return acc;
}

inline int64_t weight_of_gaps(const std::vector<int64_t>& gaps) {
  int64_t w = 0, i = 0;
  for (int64_t x : gaps) w += x - (++i);
  return w;
}

// Is the complement of `gaps` inside [0, 2g] additively closed? (gaps must be
// sorted, within [1, 2g-1]; then the complement extends to a semigroup.)
inline bool gapset_is_semigroup(const std::vector<int64_t>& gaps) {
  if (gaps.empty()) return true;
  const int64_t g = static_cast<int64_t>(gaps.size());
  const int64_t limit = 2 * g;
  if (gaps.back() > limit - 1) return false;
  std::vector<char> in(static_cast<std::size_t>(limit + 1), 1);
  for (int64_t x : gaps) in[static_cast<std::size_t>(x)] = 0;
  for (int64_t a = 1; 2 * a <= limit; ++a) {
    if (!in[static_cast<std::size_t>(a)]) continue;
    for (int64_t b = a; a + b <= limit; ++b)
      if (in[static_cast<std::size_t>(b)] && !in[static_cast<std::size_t>(a + b)])
        return false;
  }
  return true;
}

// All genus-g gap sets, by filtering every g-subset of [1, 2g-1]. Practical
// for g <= 10. Sorted lexicographically.
inline std::vector<std::vector<int64_t>> all_gapsets(int64_t g) {
  std::vector<std::vector<int64_t>> out;
  if (g == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int64_t> pick;
  // Each gap set contains 1 (otherwise 1 generates everything), so fix it.
  pick.push_back(1);
  const int64_t top = 2 * g - 1;
  auto rec = [&](auto&& self, int64_t next) -> void {
    if (static_cast<int64_t>(pick.size()) == g) {
      if (gapset_is_semigroup(pick)) out.push_back(pick);
      return;
    }
    const int64_t need = g - static_cast<int64_t>(pick.size());
    for (int64_t x = next; x + need - 1 <= top; ++x) {
      pick.push_back(x);
      self(self, x + 1);
      pick.pop_back();
    }
  };
  rec(rec, 2);
  return out;
}

}  // namespace oracle

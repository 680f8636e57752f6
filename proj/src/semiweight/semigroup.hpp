#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "semiweight/intset.hpp"

namespace semiweight {

struct WeightReport {
  std::int64_t genus = 0;
  std::int64_t weight = 0;      // sum of (gap_i - i)
  std::int64_t inflection = 0;  // sum of the truncation elements
  std::vector<std::int64_t> gaps;
};

// A numerical semigroup of genus g, stored as membership bits over
// [0, window] with window = max(2g, 1). Membership above the window is
// implicitly true (the conductor of a genus-g semigroup is at most 2g).
// Values are immutable once constructed.
class Semigroup {
 public:
  static Semigroup naturals();

  // Additive closure of {0} union gens. Requires positive entries with
  // gcd 1; duplicates are tolerated.
  static Semigroup from_generators(const std::vector<std::int64_t>& gens);

  // The unique genus-g semigroup whose members in [1, 2g] are exactly trunc.
  // Validates cardinality and additive closure, naming a violating pair.
  static Semigroup from_truncation(const std::vector<std::int64_t>& trunc,
                                   std::int64_t genus);

  // Complement construction: members are everything except the given gaps.
  static Semigroup from_gaps(const std::vector<std::int64_t>& gaps);

  // Trusted constructor for internal callers (enumeration tree): bits must
  // already describe a valid semigroup over [0, max(2*genus, 1)].
  static Semigroup from_members_unchecked(IntSet members, std::int64_t genus);

  std::int64_t genus() const { return genus_; }
  std::int64_t window() const { return members_.limit(); }

  // Total membership: true for every integer above the window.
  bool contains(std::int64_t x) const {
    if (x < 0) return false;
    if (x > window()) return true;
    return members_.test(x);
  }

  std::int64_t multiplicity() const;  // smallest positive element
  std::int64_t conductor() const;     // smallest c with [c, inf) contained
  std::int64_t frobenius() const { return conductor() - 1; }

  std::vector<std::int64_t> gaps() const;
  std::vector<std::int64_t> truncation() const;  // members in [1, 2g]
  std::vector<std::int64_t> generators() const;  // minimal generating set

  std::int64_t weight() const;
  std::int64_t inflection() const;
  WeightReport weight_report() const;

  const IntSet& members() const { return members_; }

  bool operator==(const Semigroup& o) const {
    return genus_ == o.genus_ && members_ == o.members_;
  }

  // Canonical order: genus first, then gap sequence lexicographically.
  static bool gap_less(const Semigroup& a, const Semigroup& b);

 private:
  Semigroup(IntSet members, std::int64_t genus)
      : members_(std::move(members)), genus_(genus) {}

  IntSet members_;
  std::int64_t genus_ = 0;
};

// {a + b : a in A, b in B, a + b <= cap}, sorted ascending. Entries must be
// nonnegative. cap = nullopt means unbounded (the result is finite anyway).
std::vector<std::int64_t> sumset(const std::vector<std::int64_t>& a,
                                 const std::vector<std::int64_t>& b,
                                 std::optional<std::int64_t> cap);

}  // namespace semiweight

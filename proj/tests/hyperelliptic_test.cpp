#include "semiweight/hyperelliptic.hpp"

#include "doctest.h"
#include "semiweight/constructions.hpp"
#include "semiweight/errors.hpp"
#include "semiweight/explorer.hpp"
#include "semiweight/numutil.hpp"

using namespace semiweight;

TEST_CASE("is_hyperelliptic: defining conditions") {
  const Semigroup h = Semigroup::from_generators({2, 11});
  CHECK(is_hyperelliptic(h, {2, 0, 5}));

  const Semigroup t = Semigroup::from_generators({3, 4, 5});
  CHECK(t.genus() == 2);
  CHECK(!is_hyperelliptic(t, {2, 0, 2}));  // 2 is a gap

  const Semigroup s = Semigroup::from_generators({6, 9, 16, 19});
  CHECK(is_hyperelliptic(s, {3, 1, 16}));
  CHECK(!is_hyperelliptic(s, {3, 2, 16}));  // n_2 = 9 != 12

  CHECK_THROWS_AS((void)is_hyperelliptic(s, {3, 1, 15}), Error);
}

TEST_CASE("residue_classes: partitions of the truncation") {
  const auto rc = residue_classes(Semigroup::from_generators({2, 3}), 3);
  CHECK(rc.classes[0].empty());
  CHECK(rc.classes[1].empty());
  CHECK(rc.classes[2] == std::vector<std::int64_t>{2});

  const auto bc = construct_bc(16, 1);
  const auto rb = residue_classes(bc.semigroup, 3);
  CHECK(rb.classes[0] ==
        std::vector<std::int64_t>{6, 9, 12, 15, 18, 21, 24, 27, 30});
  CHECK(rb.classes[1] == std::vector<std::int64_t>{16, 19, 22, 25, 28, 31});
  CHECK(rb.classes[2] == std::vector<std::int64_t>{32});

  // <6,9,13,16> at genus 13: sizes partition 13 as (7, 5, 1).
  const auto rs = residue_classes(Semigroup::from_generators({6, 9, 13, 16}), 3);
  CHECK(rs.classes[0].size() == 7);
  CHECK(rs.classes[1].size() == 5);
  CHECK(rs.classes[2].size() == 1);
}

TEST_CASE("analyze: u1, family minimum, chi") {
  const auto bc = construct_bc(16, 1);
  const auto a = analyze(bc.semigroup, {3, 1, 16});
  CHECK(a.u1 == 16);
  CHECK(*a.u1_family_min == 14);
  CHECK(*a.chi == 2);
  CHECK(a.first_elements.size() == 4);
  CHECK(a.first_elements[0] == 6);

  const auto ct = construct_ct(12, 1);
  const auto ac = analyze(ct.semigroup, {3, 1, 12});
  CHECK(ac.u1 == 10);
  CHECK(*ac.u1_family_min == 10);
  CHECK(*ac.chi == 0);

  // Every truncation element of <2,11> is even.
  const Semigroup h = Semigroup::from_generators({2, 11});
  CHECK_THROWS_AS((void)analyze(h, {2, 0, 5}), Error);
  try {
    analyze(h, {2, 0, 5});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_nonzero_residue_element);
  }
}

TEST_CASE("ct_lower_bound: closed form") {
  CHECK(ct_lower_bound({3, 1, 16}) == Rational(36));
  CHECK(ct_lower_bound({3, 0, 3}) == Rational(1));
  for (std::int64_t g = 2; g <= 20; ++g)
    CHECK(ct_lower_bound({2, 0, g}) == Rational(binom2(g)));
}

TEST_CASE("torres_bounds") {
  CHECK(torres_bounds(0, 6) == std::pair<std::int64_t, std::int64_t>{15, 15});
  CHECK(torres_bounds(1, 6) == std::pair<std::int64_t, std::int64_t>{6, 8});
  CHECK_THROWS_AS(torres_bounds(2, 3), Error);
  try {
    torres_bounds(2, 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::hypothesis_violated);
  }
}

TEST_CASE("family minimum of u1 matches the formula from the recorded genus on") {
  // Agreement thresholds recorded by the harness: 1, 8, 17 for gamma 0, 1, 2.
  const std::int64_t thresholds[3] = {1, 8, 17};
  for (std::int64_t gamma = 0; gamma <= 2; ++gamma) {
    for (std::int64_t g = 1; g <= 18; ++g) {
      const auto family = enumerate_hyperelliptic({3, gamma, g});
      if (family.empty()) continue;
      std::int64_t min_u1 = -1;
      for (const Semigroup& s : family) {
        const auto a = analyze(s, {3, gamma, g});
        if (min_u1 < 0 || a.u1 < min_u1) min_u1 = a.u1;
      }
      if (g >= thresholds[gamma]) {
        CHECK(min_u1 == u1_family_min_n3(g, gamma));
      } else {
        CHECK(min_u1 == 6 * gamma + 1);  // pinned at the smallest non-multiple
      }
    }
  }
}

TEST_CASE("residue-class cardinality bound and dilation structure") {
  // Over every enumerated (3,gamma)-hyperelliptic semigroup, gamma <= 2,
  // g <= 14: #S_{3-(u1 mod 3)} <= gamma + ceil(chi/3), and the residue-0
  // class divided by 3 is the truncation of a genus-gamma semigroup.
  for (std::int64_t gamma = 0; gamma <= 2; ++gamma) {
    for (std::int64_t g = 1; g <= 14; ++g) {
      for (const Semigroup& s : enumerate_hyperelliptic({3, gamma, g})) {
        const auto a = analyze(s, {3, gamma, g});
        const auto rc = residue_classes(s, 3);
        const std::int64_t other = 3 - imod(a.u1, 3);
        const std::int64_t bound = gamma + ceil_div(*a.chi, 3);
        CHECK(static_cast<std::int64_t>(rc.classes[static_cast<std::size_t>(other)].size()) <= bound);

        // Dilation: gaps divisible by 3, divided by 3, form the gap set of a
        // genus-gamma semigroup; closure of the scaled-down members holds.
        std::vector<std::int64_t> scaled_gaps;
        for (std::int64_t x : s.gaps())
          if (x % 3 == 0) scaled_gaps.push_back(x / 3);
        REQUIRE(static_cast<std::int64_t>(scaled_gaps.size()) == gamma);
        const Semigroup dilated_base = Semigroup::from_gaps(scaled_gaps);
        for (std::int64_t x = 0; x <= 2 * g; ++x)
          CHECK(s.contains(3 * x) == dilated_base.contains(x));
      }
    }
  }
}

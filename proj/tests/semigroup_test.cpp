#include "semiweight/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "semiweight/errors.hpp"

using namespace semiweight;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("from_generators: small closures") {
  const Semigroup s = Semigroup::from_generators({2, 3});
  CHECK(s.genus() == 1);
  CHECK(s.gaps() == std::vector<std::int64_t>{1});

  const Semigroup t = Semigroup::from_generators({3, 5, 7});
  CHECK(t.genus() == 3);
  CHECK(t.gaps() == std::vector<std::int64_t>{1, 2, 4});
}

TEST_CASE("from_generators: <6,9,13,16>") {
  const Semigroup s = Semigroup::from_generators({6, 9, 13, 16});
  CHECK(s.genus() == 13);
  const std::vector<std::int64_t> expected{1, 2, 3, 4, 5, 7, 8, 10, 11, 14, 17, 20, 23};
  CHECK(s.gaps() == expected);
  CHECK(s.gaps() == oracle::gaps_from_generators({6, 9, 13, 16}, 200));
  CHECK(s.generators() == std::vector<std::int64_t>{6, 9, 13, 16});
}

TEST_CASE("from_generators: errors") {
  CHECK(code_of([] { Semigroup::from_generators({}); }) == ErrorCode::empty_generators);
  CHECK(code_of([] { Semigroup::from_generators({4, 6}); }) ==
        ErrorCode::non_coprime_generators);
  CHECK(code_of([] { Semigroup::from_generators({0, 3}); }) ==
        ErrorCode::invalid_argument);
}

TEST_CASE("from_truncation: examples") {
  const Semigroup s = Semigroup::from_truncation({2, 4}, 2);
  CHECK(s.gaps() == std::vector<std::int64_t>{1, 3});
  CHECK(s == Semigroup::from_generators({2, 5}));

  // S^ct(12, 1)
  const std::vector<std::int64_t> ct{6, 9, 12, 15, 18, 21, 24, 10, 16, 19, 22, 20};
  const Semigroup v = Semigroup::from_truncation(ct, 12);
  CHECK(v.genus() == 12);

  try {
    Semigroup::from_truncation({1, 3}, 2);
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_closed);
    CHECK(std::string(e.what()).find("1 + 1") != std::string::npos);
  }

  CHECK(code_of([] { Semigroup::from_truncation({2, 4, 6}, 2); }) ==
        ErrorCode::wrong_cardinality);
  CHECK(code_of([] { Semigroup::from_truncation({2, 5}, 2); }) ==
        ErrorCode::invalid_argument);  // 5 > 2g
}

TEST_CASE("weight_report: anchors") {
  const Semigroup hyper = Semigroup::from_generators({2, 11});
  const WeightReport r = hyper.weight_report();
  CHECK(r.weight == 10);  // C(5,2)
  CHECK(r.inflection == 30);
  CHECK(r.gaps == std::vector<std::int64_t>{1, 3, 5, 7, 9});

  const Semigroup s = Semigroup::from_generators({6, 9, 13, 16});
  const WeightReport rs = s.weight_report();
  CHECK(rs.weight == 34);
  // Gap sum 125, sum over [1, 26] is 351, so the truncation sums to 226 and
  // the identity gives (3*169 + 13)/2 = 260 = 34 + 226.
  CHECK(rs.inflection == 226);
  CHECK(rs.weight + rs.inflection == (3 * 13 * 13 + 13) / 2);

  const WeightReport r0 = Semigroup::naturals().weight_report();
  CHECK(r0.weight == 0);
  CHECK(r0.inflection == 0);
}

TEST_CASE("truncation: examples") {
  CHECK(Semigroup::from_generators({2, 3}).truncation() ==
        std::vector<std::int64_t>{2});
  CHECK(Semigroup::from_generators({2, 5}).truncation() ==
        std::vector<std::int64_t>{2, 4});
  const std::vector<std::int64_t> expected{6,  9,  12, 15, 16, 18, 19, 21,
                                           22, 24, 25, 27, 28, 30, 31, 32};
  const Semigroup s = Semigroup::from_generators({6, 9, 16, 19});
  CHECK(s.genus() == 16);
  CHECK(s.truncation() == expected);
}

TEST_CASE("membership is total above the window") {
  const Semigroup s = Semigroup::from_generators({2, 11});
  CHECK(s.window() == 10);
  CHECK(s.contains(11));
  CHECK(s.contains(997));
  CHECK(!s.contains(9));
  CHECK(!s.contains(-2));
}

TEST_CASE("sumset: examples") {
  CHECK(sumset({0, 1}, {0, 1}, 10) == std::vector<std::int64_t>{0, 1, 2});
  CHECK(sumset({4}, {6, 9}, 12) == std::vector<std::int64_t>{10});
  const std::vector<std::int64_t> g3{1, 2, 3, 4, 5, 7, 8, 10, 11, 14, 17, 20, 23};
  CHECK(sumset(g3, g3, std::nullopt).size() == 35);
}

TEST_CASE("sumset: equals the triple loop on random sets") {
  std::mt19937_64 rng(20240901);
  std::uniform_int_distribution<std::int64_t> size_d(0, 12), val_d(0, 60),
      cap_d(-1, 120);
  for (int it = 0; it < 500; ++it) {
    std::vector<std::int64_t> a, b;
    for (std::int64_t i = size_d(rng); i > 0; --i) a.push_back(val_d(rng));
    for (std::int64_t i = size_d(rng); i > 0; --i) b.push_back(val_d(rng));
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    const std::int64_t cap = cap_d(rng);
    const auto got =
        sumset(a, b, cap < 0 ? std::nullopt : std::optional<std::int64_t>(cap));
    CHECK(got == oracle::sumset(a, b, cap));
  }
}

TEST_CASE("round trip: from_truncation(truncation(S)) reproduces S") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> gen_d(2, 40), count_d(2, 4);
  for (int it = 0; it < 500; ++it) {
    std::vector<std::int64_t> gens;
    for (std::int64_t i = count_d(rng); i > 0; --i) gens.push_back(gen_d(rng));
    gens.push_back(gen_d(rng) | 1);  // odd entry nudges the gcd toward 1
    std::int64_t g = 0;
    for (std::int64_t x : gens) g = std::gcd(g, x);
    if (g != 1) continue;
    const Semigroup s = Semigroup::from_generators(gens);
    const Semigroup back = Semigroup::from_truncation(s.truncation(), s.genus());
    CHECK(s == back);
  }
}

TEST_CASE("identity: weight + inflection = (3g^2 + g)/2 on random closures") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> gen_d(2, 60), count_d(1, 4);
  int checked = 0;
  for (int it = 0; it < 10000; ++it) {
    std::vector<std::int64_t> gens;
    for (std::int64_t i = count_d(rng); i > 0; --i) gens.push_back(gen_d(rng));
    std::int64_t g = 0;
    for (std::int64_t x : gens) g = std::gcd(g, x);
    if (g != 1) continue;
    const Semigroup s = Semigroup::from_generators(gens);
    const WeightReport r = s.weight_report();
    REQUIRE(r.weight + r.inflection ==
            (3 * s.genus() * s.genus() + s.genus()) / 2);
    ++checked;
  }
  CHECK(checked > 5000);
}

TEST_CASE("claim: k members below g force 2k-1 self-sums below 2g") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::int64_t> g_d(2, 60), len_d(1, 14),
      step_d(1, 9);
  for (int it = 0; it < 10000; ++it) {
    const std::int64_t g = g_d(rng);
    std::uniform_int_distribution<std::int64_t> start_d(1, g);
    std::vector<std::int64_t> seq{start_d(rng)};
    for (std::int64_t i = len_d(rng); i > 0; --i)
      seq.push_back(seq.back() + step_d(rng));
    std::int64_t k = 0;
    for (std::int64_t x : seq) k += (x >= 1 && x <= g) ? 1 : 0;
    if (k < 1) continue;
    const auto sums = oracle::sumset(seq, seq, -1);
    std::int64_t in_range = 0;
    for (std::int64_t x : sums) in_range += (x >= 1 && x <= 2 * g) ? 1 : 0;
    REQUIRE(in_range >= 2 * k - 1);
  }
}

TEST_CASE("claim: deleting inside a maximal progression shifts the self-sum "
          "count by one exactly for the second element") {
  // T = {x0, x0+d, ..., x0+kd} with x0 + x_k <= 2g maximal. Deleting x_i
  // (i >= 1) drops #(T+T) within [1, 2g] by 1 when i = 1 and by 0 otherwise.
  auto check_case = [](std::int64_t x0, std::int64_t d, std::int64_t k,
                       std::int64_t two_g, std::int64_t i) {
    std::vector<std::int64_t> t;
    for (std::int64_t j = 0; j <= k; ++j) t.push_back(x0 + j * d);
    std::vector<std::int64_t> s = t;
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
    const auto count_in = [&](const std::vector<std::int64_t>& v) {
      const auto sums = oracle::sumset(v, v, -1);
      std::int64_t n = 0;
      for (std::int64_t x : sums) n += (x >= 1 && x <= two_g) ? 1 : 0;
      return n;
    };
    const std::int64_t before = count_in(t), after = count_in(s);
    const std::int64_t drop = before - after;
    REQUIRE(drop == (i == 1 ? 1 : 0));
  };

  // Exhaustive over progression lengths <= 12.
  for (std::int64_t x0 = 0; x0 <= 10; ++x0) {
    for (std::int64_t d = 1; d <= 6; ++d) {
      for (std::int64_t k = 1; k <= 11; ++k) {
        const std::int64_t lo = x0 + (x0 + k * d);
        for (std::int64_t two_g = lo + (lo % 2); two_g < lo + d; two_g += 2) {
          if (two_g < 2) continue;
          for (std::int64_t i = 1; i <= k; ++i)
            check_case(x0, d, k, two_g, i);
        }
      }
    }
  }

  // Randomized instances on top.
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::int64_t> x0_d(0, 40), d_d(1, 12), k_d(1, 20);
  for (int it = 0; it < 10000; ++it) {
    const std::int64_t x0 = x0_d(rng), d = d_d(rng), k = k_d(rng);
    const std::int64_t lo = x0 + (x0 + k * d);
    std::uniform_int_distribution<std::int64_t> g_top(0, (d - 1) / 2);
    std::int64_t two_g = lo + (lo % 2) + 2 * g_top(rng);
    if (two_g >= lo + d) two_g = lo + (lo % 2);
    if (two_g < 2 || two_g >= lo + d) continue;
    std::uniform_int_distribution<std::int64_t> i_d(1, k);
    check_case(x0, d, k, two_g, i_d(rng));
  }
}

TEST_CASE("weight monotone in inflection at fixed genus") {
  // Remark-style equivalence: W_S >= W_T iff infl(S) <= infl(T).
  for (std::int64_t g = 1; g <= 7; ++g) {
    const auto sets = oracle::all_gapsets(g);
    std::vector<Semigroup> sgs;
    for (const auto& gaps : sets) sgs.push_back(Semigroup::from_gaps(gaps));
    for (const auto& a : sgs) {
      for (const auto& b : sgs) {
        CHECK((a.weight() >= b.weight()) == (a.inflection() <= b.inflection()));
      }
    }
  }
}

TEST_CASE("from_gaps rejects impossible gap sets") {
  CHECK(code_of([] { Semigroup::from_gaps({1, 5}); }) == ErrorCode::not_closed);
  CHECK(code_of([] { Semigroup::from_gaps({2}); }) == ErrorCode::not_closed);
}

#include "semiweight/buchweitz.hpp"

#include <string>

#include "semiweight/constructions.hpp"
#include "semiweight/errors.hpp"
#include "semiweight/intset.hpp"
#include "semiweight/numutil.hpp"

namespace semiweight {

namespace {

IntSet gap_bits(const Semigroup& s) {
  const auto gaps = s.gaps();
  IntSet bits(gaps.empty() ? 0 : gaps.back());
  for (std::int64_t x : gaps) bits.set(x);
  return bits;
}

}  // namespace

std::vector<std::int64_t> n_fold_gap_sums(const Semigroup& s, std::int64_t n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "n must be at least 1");
  if (s.genus() == 0)
    fail(ErrorCode::empty_gap_set, "genus-0 semigroup has no gaps");
  const IntSet gaps = gap_bits(s);
  const std::int64_t cap = n * gaps.max_value();
  IntSet acc(cap);
  acc.or_shifted(gaps, 0);
  for (std::int64_t i = 1; i < n; ++i) acc = sumset_bits(acc, gaps, cap);
  return acc.values();
}

BuchweitzReport buchweitz_check(const Semigroup& s, std::int64_t n_max) {
  if (n_max < 2) fail(ErrorCode::invalid_argument, "n_max must be at least 2");
  if (s.genus() < 2)
    fail(ErrorCode::genus_too_small,
         "criterion needs genus >= 2, got " + std::to_string(s.genus()));

  BuchweitzReport rep;
  rep.genus = s.genus();
  rep.n_max = n_max;
  rep.overall_pass = true;

  const IntSet gaps = gap_bits(s);
  const std::int64_t cap = n_max * gaps.max_value();
  IntSet acc(cap);
  acc.or_shifted(gaps, 0);
  for (std::int64_t n = 2; n <= n_max; ++n) {
    acc = sumset_bits(acc, gaps, cap);
    BuchweitzRow row;
    row.n = n;
    row.card = acc.count();
    row.bound = (2 * n - 1) * (s.genus() - 1);
    row.pass = row.card <= row.bound;
    rep.overall_pass = rep.overall_pass && row.pass;
    rep.per_n.push_back(row);
  }
  return rep;
}

std::int64_t sn_closed_form_card(std::int64_t N, std::int64_t g,
                                 std::int64_t gamma, std::int64_t n) {
  check_sn_preconditions(N, g, gamma);
  if (gamma <= 0)
    fail(ErrorCode::precondition_violated,
         "closed form requires gamma > 0");
  if (n < 2) fail(ErrorCode::invalid_argument, "n must be at least 2");
  const std::int64_t u1 = sn_u1(N, g, gamma);
  const std::int64_t res = imod((N - 1) * u1, N);
  return (2 * n - 1) * g - (2 * n - 3) * gamma - (n - 1) * res - 1;
}

BuchweitzReport buchweitz_check_sn(std::int64_t N, std::int64_t g,
                                   std::int64_t gamma, std::int64_t n_max) {
  ConstructionResult built = construct_sn(N, g, gamma);
  BuchweitzReport rep = buchweitz_check(built.semigroup, n_max);
  if (gamma > 0) {
    for (auto& row : rep.per_n)
      row.closed_form = sn_closed_form_card(N, g, gamma, row.n);
  }
  return rep;
}

}  // namespace semiweight

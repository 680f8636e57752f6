#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "semiweight/semigroup.hpp"

namespace semiweight {

struct BuchweitzRow {
  std::int64_t n = 0;
  std::int64_t card = 0;   // #n(G)
  std::int64_t bound = 0;  // (2n-1)(g-1)
  bool pass = false;
  std::optional<std::int64_t> closed_form;  // filled for S_N inputs
};

struct BuchweitzReport {
  std::int64_t genus = 0;
  std::int64_t n_max = 0;
  std::vector<BuchweitzRow> per_n;
  bool overall_pass = false;
};

// Exact set of n-fold sums of gaps, n >= 1. Genus 0 raises EmptyGapSet.
std::vector<std::int64_t> n_fold_gap_sums(const Semigroup& s, std::int64_t n);

// Realizability criterion rows for n = 2 .. n_max; genus must be >= 2.
BuchweitzReport buchweitz_check(const Semigroup& s, std::int64_t n_max);

// (2n-1)g - (2n-3)gamma - (n-1)((N-1)u1 mod N) - 1 for the S_N gap set;
// requires the S_N preconditions, gamma > 0 and n >= 2.
std::int64_t sn_closed_form_card(std::int64_t N, std::int64_t g,
                                 std::int64_t gamma, std::int64_t n);

// buchweitz_check on S_N with per-row closed forms (gamma > 0 only).
BuchweitzReport buchweitz_check_sn(std::int64_t N, std::int64_t g,
                                   std::int64_t gamma, std::int64_t n_max);

}  // namespace semiweight

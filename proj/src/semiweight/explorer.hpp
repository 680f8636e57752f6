#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiweight/hyperelliptic.hpp"
#include "semiweight/semigroup.hpp"

namespace semiweight {

struct ExploreOptions {
  std::uint64_t node_cap = 10'000'000;  // tree nodes per query
  int workers = 1;
  int split_depth = 12;  // frontier genus below which subtrees go to the pool
};

// Every numerical semigroup of the given genus, exactly once, sorted by gap
// sequence. Raises ResourceLimit when the (growth-estimated or actual) node
// count exceeds options.node_cap.
std::vector<Semigroup> enumerate_genus(std::int64_t g,
                                       const ExploreOptions& options = {});

// The members of H(genus, gamma) for the given N, via the same tree with
// subtrees cut once a pinned prefix violates the defining conditions.
std::vector<Semigroup> enumerate_hyperelliptic(const HyperParams& params,
                                               const ExploreOptions& options = {});

struct SearchResult {
  HyperParams params;
  std::int64_t family_size = 0;
  std::optional<std::int64_t> max_weight;  // absent when the family is empty
  std::vector<Semigroup> argmax;           // canonical gap order
  std::optional<bool> matches_bc;          // present when construct_bc is in domain
};

SearchResult search_max_weight(const HyperParams& params,
                               const ExploreOptions& options = {});

struct ThresholdRow {
  std::int64_t g = 0;
  std::int64_t family_size = 0;
  std::optional<std::int64_t> max_weight;
  std::optional<std::int64_t> ref_weight;  // bc / torres-upper / sn, by N
  std::optional<bool> equal;
};

struct ThresholdScan {
  std::int64_t N = 0;
  std::int64_t gamma = 0;
  std::int64_t g_lo = 0;
  std::int64_t g_hi = 0;
  std::string reference;  // "bc", "torres_upper", "sn" or "none"
  std::vector<ThresholdRow> rows;
  // Minimal g in range such that every later row with a reference weight has
  // max == ref; absent when no such genus exists.
  std::optional<std::int64_t> g_star;
};

ThresholdScan threshold_scan(std::int64_t N, std::int64_t gamma,
                             std::int64_t g_lo, std::int64_t g_hi,
                             const ExploreOptions& options = {});

}  // namespace semiweight

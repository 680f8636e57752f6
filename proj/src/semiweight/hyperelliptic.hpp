#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "semiweight/numutil.hpp"
#include "semiweight/semigroup.hpp"

namespace semiweight {

// The (N, gamma) family at a fixed genus.
struct HyperParams {
  std::int64_t N = 2;
  std::int64_t gamma = 0;
  std::int64_t genus = 0;
};

struct ResidueClasses {
  std::int64_t modulus = 0;
  // classes[j] = truncation elements with residue j, sorted ascending.
  std::vector<std::vector<std::int64_t>> classes;
};

struct HyperAnalysis {
  std::int64_t u1 = 0;  // least truncation element with nonzero residue
  std::optional<std::int64_t> u1_family_min;  // closed form, N = 3 only
  std::optional<std::int64_t> chi;            // u1 - u1_family_min
  std::vector<std::int64_t> first_elements;   // first max(gamma, 4) positive members
};

// Both defining conditions: the first gamma positive elements are multiples
// of N with the gamma-th equal to 2*gamma*N, and (2*gamma+1)*N is a member.
// For gamma = 0 only membership of N is checked.
bool is_hyperelliptic(const Semigroup& s, const HyperParams& p);

ResidueClasses residue_classes(const Semigroup& s, std::int64_t modulus);

// Family minimum of u1 over all (3, gamma)-hyperelliptic semigroups of
// genus g: g - 3*gamma + 1 + floor((g mod 3) / 2).
std::int64_t u1_family_min_n3(std::int64_t g, std::int64_t gamma);

HyperAnalysis analyze(const Semigroup& s, const HyperParams& p);

// (g - N*gamma - N + 1 + q)(g - N*gamma - q) / (2(N-1)), q = (g - gamma) mod (N-1).
Rational ct_lower_bound(const HyperParams& p);

// (C(g - 2*gamma, 2), C(g - 2*gamma, 2) + 2*gamma^2); requires g >= 2*gamma.
std::pair<std::int64_t, std::int64_t> torres_bounds(std::int64_t gamma,
                                                    std::int64_t g);

}  // namespace semiweight

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semiweight/hyperelliptic.hpp"
#include "semiweight/numutil.hpp"
#include "semiweight/semigroup.hpp"

namespace semiweight {

enum class ConstructionKind { ct, bc, sn, snstar };

const char* kind_name(ConstructionKind kind);  // "CT", "BC", "SN", "SNSTAR"
std::optional<ConstructionKind> kind_from_string(std::string_view text);

struct ConstructionResult {
  ConstructionKind kind;
  std::int64_t N = 3;
  std::int64_t g = 0;
  std::int64_t gamma = 0;
  std::int64_t u1 = 0;
  std::optional<std::int64_t> tau;  // bc only
  std::optional<std::int64_t> nu;   // bc only
  // Residue class sizes of the truncation, indexed by residue (ct/bc only).
  std::optional<std::array<std::int64_t, 3>> class_sizes;
  Semigroup semigroup;
  Rational closed_form;  // the paper-style weight formula, evaluated exactly
  std::int64_t direct_weight = 0;
  bool weights_agree = false;
  std::vector<std::string> notes;
};

// Small-genus scheme: residue-0 class {6i} u {6*gamma+3j}, u1 = g-3*gamma+1,
// class r = (u1 + (S0 u {0})) in [2g], class 3-r = its self-sum in [2g].
// Requires g != 2 (mod 3); every structural failure is reported as
// ConstructionOutOfDomain.
ConstructionResult construct_ct(std::int64_t g, std::int64_t gamma);

// Large-genus maximal-weight scheme with residue-0 class equal to the
// dilated hyperelliptic truncation (3*<2, 2*gamma+1>) in [2g], with the
// case split on (g - gamma) mod 3 and the tau/nu cardinalities. Validated
// literally; any violated claim is ConstructionOutOfDomain.
ConstructionResult construct_bc(std::int64_t g, std::int64_t gamma);

// S_N = N<2, 2*gamma+1> + <u1, u1 + N> with u1 = 2(g-gamma)/(N-1) + 1.
ConstructionResult construct_sn(std::int64_t N, std::int64_t g, std::int64_t gamma);

// S_N* = N<2, 2*gamma+1> + <u1*> with u1* = 2(g - N*gamma)/(N-1) + 1.
ConstructionResult construct_snstar(std::int64_t N, std::int64_t g, std::int64_t gamma);

// Per-residue gap lists of S_N in closed form (index = residue mod N).
std::vector<std::vector<std::int64_t>> sn_gap_classes(std::int64_t N,
                                                      std::int64_t g,
                                                      std::int64_t gamma);

std::int64_t sn_u1(std::int64_t N, std::int64_t g, std::int64_t gamma);

// Throw PreconditionViolated unless N is an odd prime, (N-1)/2 | g-gamma,
// (2(g-gamma)/(N-1)) mod N != N-1, and u1 >= 2*gamma (the saturation bound
// below which the closed-form gap structure collapses).
void check_sn_preconditions(std::int64_t N, std::int64_t g, std::int64_t gamma);

bool is_prime(std::int64_t n);

}  // namespace semiweight

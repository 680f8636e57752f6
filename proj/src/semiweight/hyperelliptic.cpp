#include "semiweight/hyperelliptic.hpp"

#include <string>

#include "semiweight/errors.hpp"

namespace semiweight {

bool is_hyperelliptic(const Semigroup& s, const HyperParams& p) {
  if (p.N < 2) fail(ErrorCode::invalid_argument, "N must be at least 2");
  if (p.gamma < 0) fail(ErrorCode::invalid_argument, "gamma must be nonnegative");
  if (s.genus() != p.genus)
    fail(ErrorCode::genus_mismatch,
         "semigroup has genus " + std::to_string(s.genus()) + ", params say " +
             std::to_string(p.genus));

  if (p.gamma > 0) {
    // The first gamma positive elements must be N, 2N, ... style multiples
    // ending exactly at 2*gamma*N.
    std::int64_t seen = 0;
    for (std::int64_t x = 1; x <= 2 * p.gamma * p.N; ++x) {
      if (!s.contains(x)) continue;
      if (x % p.N != 0) return false;
      ++seen;
      if (seen == p.gamma) {
        if (x != 2 * p.gamma * p.N) return false;
        break;
      }
    }
    if (seen < p.gamma) return false;
  }
  return s.contains((2 * p.gamma + 1) * p.N);
}

ResidueClasses residue_classes(const Semigroup& s, std::int64_t modulus) {
  if (modulus < 2) fail(ErrorCode::invalid_argument, "modulus must be at least 2");
  ResidueClasses rc;
  rc.modulus = modulus;
  rc.classes.resize(static_cast<std::size_t>(modulus));
  for (std::int64_t x : s.truncation())
    rc.classes[static_cast<std::size_t>(imod(x, modulus))].push_back(x);
  return rc;
}

std::int64_t u1_family_min_n3(std::int64_t g, std::int64_t gamma) {
  return g - 3 * gamma + 1 + imod(g, 3) / 2;
}

HyperAnalysis analyze(const Semigroup& s, const HyperParams& p) {
  if (!is_hyperelliptic(s, p))
    fail(ErrorCode::precondition_violated,
         "analyze requires an (N, gamma)-hyperelliptic semigroup");

  HyperAnalysis a;
  std::optional<std::int64_t> u1;
  for (std::int64_t x : s.truncation()) {
    if (x % p.N != 0) {
      u1 = x;
      break;
    }
  }
  if (!u1)
    fail(ErrorCode::no_nonzero_residue_element,
         "every truncation element is divisible by " + std::to_string(p.N));
  a.u1 = *u1;

  if (p.N == 3) {
    a.u1_family_min = u1_family_min_n3(p.genus, p.gamma);
    a.chi = a.u1 - *a.u1_family_min;
  }

  const std::int64_t want = std::max<std::int64_t>(p.gamma, 4);
  for (std::int64_t x = 1; static_cast<std::int64_t>(a.first_elements.size()) < want; ++x)
    if (s.contains(x)) a.first_elements.push_back(x);
  return a;
}

Rational ct_lower_bound(const HyperParams& p) {
  if (p.N < 2) fail(ErrorCode::invalid_argument, "N must be at least 2");
  const std::int64_t q = imod(p.genus - p.gamma, p.N - 1);
  const std::int64_t num =
      (p.genus - p.N * p.gamma - p.N + 1 + q) * (p.genus - p.N * p.gamma - q);
  return Rational(num, 2 * (p.N - 1));
}

std::pair<std::int64_t, std::int64_t> torres_bounds(std::int64_t gamma,
                                                    std::int64_t g) {
  if (gamma < 0 || g < 0)
    fail(ErrorCode::invalid_argument, "gamma and g must be nonnegative");
  if (g < 2 * gamma)
    fail(ErrorCode::hypothesis_violated,
         "bounds require g >= 2*gamma (g = " + std::to_string(g) +
             ", gamma = " + std::to_string(gamma) + ")");
  const std::int64_t lo = binom2(g - 2 * gamma);
  return {lo, lo + 2 * gamma * gamma};
}

}  // namespace semiweight

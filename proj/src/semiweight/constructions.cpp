#include "semiweight/constructions.hpp"

#include <algorithm>

#include "semiweight/errors.hpp"

namespace semiweight {

namespace {

[[noreturn]] void out_of_domain(const std::string& msg) {
  fail(ErrorCode::construction_out_of_domain, msg);
}

void append_weight_notes(ConstructionResult& r) {
  if (!r.closed_form.integral()) {
    r.notes.push_back("closed-form weight " + r.closed_form.str() +
                      " is not an integer");
  }
  if (!r.weights_agree) {
    r.notes.push_back("closed-form weight " + r.closed_form.str() +
                      " differs from direct weight " +
                      std::to_string(r.direct_weight));
  }
}

std::array<std::int64_t, 3> sizes_by_residue(
    const std::vector<std::vector<std::int64_t>>& classes) {
  return {static_cast<std::int64_t>(classes[0].size()),
          static_cast<std::int64_t>(classes[1].size()),
          static_cast<std::int64_t>(classes[2].size())};
}

Semigroup complete_classes(const std::vector<std::vector<std::int64_t>>& classes,
                           std::int64_t g, const char* kind) {
  std::vector<std::int64_t> trunc;
  for (const auto& c : classes) trunc.insert(trunc.end(), c.begin(), c.end());
  std::sort(trunc.begin(), trunc.end());
  if (static_cast<std::int64_t>(trunc.size()) != g)
    out_of_domain(std::string(kind) + ": residue classes hold " +
                  std::to_string(trunc.size()) + " elements, expected g = " +
                  std::to_string(g));
  try {
    return Semigroup::from_truncation(trunc, g);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::not_closed)
      out_of_domain(std::string(kind) + ": " + e.what());
    throw;
  }
}

void require_hyperelliptic(const Semigroup& s, std::int64_t N, std::int64_t g,
                           std::int64_t gamma, const char* kind) {
  if (!is_hyperelliptic(s, HyperParams{N, gamma, g}))
    out_of_domain(std::string(kind) + ": result is not (" + std::to_string(N) +
                  ", " + std::to_string(gamma) + ")-hyperelliptic");
}

}  // namespace

const char* kind_name(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::ct: return "CT";
    case ConstructionKind::bc: return "BC";
    case ConstructionKind::sn: return "SN";
    case ConstructionKind::snstar: return "SNSTAR";
  }
  return "?";
}

std::optional<ConstructionKind> kind_from_string(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "ct") return ConstructionKind::ct;
  if (t == "bc") return ConstructionKind::bc;
  if (t == "sn") return ConstructionKind::sn;
  if (t == "snstar") return ConstructionKind::snstar;
  return std::nullopt;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ConstructionResult construct_ct(std::int64_t g, std::int64_t gamma) {
  if (g < 0 || gamma < 0)
    fail(ErrorCode::invalid_argument, "g and gamma must be nonnegative");
  if (imod(g, 3) == 2)
    out_of_domain("ct: g = " + std::to_string(g) + " is 2 (mod 3)");

  const std::int64_t u1 = g - 3 * gamma + 1;
  if (u1 < 1)
    out_of_domain("ct: u1 = g - 3*gamma + 1 = " + std::to_string(u1) +
                  " is not positive");
  const std::int64_t r = imod(g + 1, 3);  // = u1 mod 3, nonzero here

  std::vector<std::vector<std::int64_t>> classes(3);
  auto& s0 = classes[0];
  for (std::int64_t i = 1; i <= gamma; ++i) s0.push_back(6 * i);
  const std::int64_t extra = floor_div(2 * g, 3) - 2 * gamma;
  for (std::int64_t j = 1; j <= extra; ++j) s0.push_back(6 * gamma + 3 * j);
  for (std::int64_t x : s0)
    if (x > 2 * g)
      out_of_domain("ct: residue-0 element " + std::to_string(x) +
                    " exceeds 2g = " + std::to_string(2 * g));

  auto& sr = classes[static_cast<std::size_t>(r)];
  if (u1 <= 2 * g) sr.push_back(u1);
  for (std::int64_t x : s0)
    if (u1 + x <= 2 * g) sr.push_back(u1 + x);

  classes[static_cast<std::size_t>(3 - r)] = sumset(sr, sr, 2 * g);

  ConstructionResult res{ConstructionKind::ct,
                         3,
                         g,
                         gamma,
                         u1,
                         std::nullopt,
                         std::nullopt,
                         sizes_by_residue(classes),
                         complete_classes(classes, g, "ct"),
                         Rational{0},
                         0,
                         false,
                         {}};
  require_hyperelliptic(res.semigroup, 3, g, gamma, "ct");

  const std::int64_t a = g - 3 * gamma;
  res.closed_form = Rational(a * (5 * a + 1), 6) + Rational(3 * a * gamma) +
                    Rational(6 * gamma * gamma + 3 * gamma) -
                    Rational(binom2(g + 1));
  res.direct_weight = res.semigroup.weight();
  res.weights_agree =
      res.closed_form.integral() && res.closed_form.num == res.direct_weight;
  append_weight_notes(res);
  return res;
}

ConstructionResult construct_bc(std::int64_t g, std::int64_t gamma) {
  if (g < 0 || gamma < 0)
    fail(ErrorCode::invalid_argument, "g and gamma must be nonnegative");
  if (g <= gamma) out_of_domain("bc: requires g > gamma");

  const std::int64_t rem = imod(g - gamma, 3);
  const bool split_case = (rem == 2);
  const std::int64_t u1 = g - gamma + 1 - 2 * (rem / 2);
  const std::int64_t r = imod(u1, 3);  // always 1 or 2

  // tau/nu depend on whether floor((gamma mod 3)/2) matches the u1 residue.
  const bool shifted = (imod(gamma, 3) / 2 == r);
  const std::int64_t tau = ceil_div(g, 3) + floor_div(gamma, 3) - (shifted ? 0 : 1);
  const std::int64_t nu = gamma - floor_div(gamma, 3) - (shifted ? 2 : 1);

  std::vector<std::vector<std::int64_t>> classes(3);
  auto& s0 = classes[0];
  const Semigroup hyper = Semigroup::from_generators({2, 2 * gamma + 1});
  for (std::int64_t h = 1; 3 * h <= 2 * g; ++h)
    if (hyper.contains(h)) s0.push_back(3 * h);

  auto& s1 = classes[static_cast<std::size_t>(r)];
  auto& s2 = classes[static_cast<std::size_t>(3 - r)];
  if (!split_case) {
    for (std::int64_t k = 0; k <= tau; ++k) s1.push_back(u1 + 3 * k);
    for (std::int64_t k = 0; k <= nu; ++k) s2.push_back(2 * u1 + 3 * k);
  } else {
    s1.push_back(u1);
    for (std::int64_t k = 0; k <= tau; ++k) s1.push_back(u1 + 6 + 3 * k);
    s2.push_back(2 * u1);
    for (std::int64_t k = 0; k <= nu; ++k) s2.push_back(2 * u1 + 6 + 3 * k);
  }

  for (std::size_t j = 1; j <= 2; ++j) {
    for (std::int64_t x : classes[j]) {
      if (x < 1 || x > 2 * g)
        out_of_domain("bc: class element " + std::to_string(x) +
                      " falls outside [1, " + std::to_string(2 * g) + "]");
    }
  }

  const auto sizes = sizes_by_residue(classes);
  const std::int64_t want0 = floor_div(2 * g, 3) - gamma;
  const std::int64_t want1 =
      ceil_div(g, 3) + floor_div(gamma, 3) + (shifted ? 1 : 0);
  const std::int64_t want2 = gamma - floor_div(gamma, 3) - (shifted ? 1 : 0);
  if (sizes[0] != want0)
    out_of_domain("bc: #S0 = " + std::to_string(sizes[0]) + ", claim says " +
                  std::to_string(want0));
  if (static_cast<std::int64_t>(s1.size()) != want1)
    out_of_domain("bc: #S_" + std::to_string(r) + " = " +
                  std::to_string(s1.size()) + ", claim says " +
                  std::to_string(want1));
  if (static_cast<std::int64_t>(s2.size()) != want2)
    out_of_domain("bc: #S_" + std::to_string(3 - r) + " = " +
                  std::to_string(s2.size()) + ", claim says " +
                  std::to_string(want2));

  ConstructionResult res{ConstructionKind::bc,
                         3,
                         g,
                         gamma,
                         u1,
                         tau,
                         nu,
                         sizes,
                         complete_classes(classes, g, "bc"),
                         Rational{0},
                         0,
                         false,
                         {}};
  require_hyperelliptic(res.semigroup, 3, g, gamma, "bc");

  const std::int64_t b = g - gamma;
  res.closed_form =
      split_case
          ? Rational(b * (5 * b - 3), 6) +
                Rational(3 * gamma * gamma + 6 - binom2(g + 1))
          : Rational(b * (5 * b + 1), 6) +
                Rational(3 * gamma * gamma - binom2(g + 1));
  res.direct_weight = res.semigroup.weight();
  res.weights_agree =
      res.closed_form.integral() && res.closed_form.num == res.direct_weight;
  append_weight_notes(res);
  return res;
}

std::int64_t sn_u1(std::int64_t N, std::int64_t g, std::int64_t gamma) {
  return 2 * (g - gamma) / (N - 1) + 1;
}

void check_sn_preconditions(std::int64_t N, std::int64_t g, std::int64_t gamma) {
  if (g < 0 || gamma < 0)
    fail(ErrorCode::invalid_argument, "g and gamma must be nonnegative");
  if (N < 3 || !is_prime(N))
    fail(ErrorCode::precondition_violated,
         "N = " + std::to_string(N) + " is not an odd prime");
  if (g < gamma)
    fail(ErrorCode::precondition_violated, "requires g >= gamma");
  if (imod(g - gamma, (N - 1) / 2) != 0)
    fail(ErrorCode::precondition_violated,
         "(N-1)/2 = " + std::to_string((N - 1) / 2) + " does not divide g - gamma = " +
             std::to_string(g - gamma));
  const std::int64_t q = 2 * (g - gamma) / (N - 1);
  if (imod(q, N) == N - 1)
    fail(ErrorCode::precondition_violated,
         "(2(g-gamma)/(N-1)) mod N = " + std::to_string(N - 1) +
             " is excluded");
  // Saturation: with u1 below 2*gamma the dilated residue-0 class absorbs
  // part of its intended gap set and the genus drops below g.
  if (q + 1 < 2 * gamma)
    fail(ErrorCode::precondition_violated,
         "u1 = " + std::to_string(q + 1) + " is below 2*gamma = " +
             std::to_string(2 * gamma) + "; residue classes do not saturate");
}

ConstructionResult construct_sn(std::int64_t N, std::int64_t g, std::int64_t gamma) {
  check_sn_preconditions(N, g, gamma);
  const std::int64_t u1 = sn_u1(N, g, gamma);
  Semigroup s = Semigroup::from_generators(
      {2 * N, (2 * gamma + 1) * N, u1, u1 + N});
  if (s.genus() != g)
    fail(ErrorCode::genus_mismatch,
         "sn: construction produced genus " + std::to_string(s.genus()) +
             ", expected " + std::to_string(g));

  ConstructionResult res{ConstructionKind::sn,
                         N,
                         g,
                         gamma,
                         u1,
                         std::nullopt,
                         std::nullopt,
                         std::nullopt,
                         std::move(s),
                         Rational{0},
                         0,
                         false,
                         {}};
  require_hyperelliptic(res.semigroup, N, g, gamma, "sn");

  const std::int64_t d = g - gamma;
  res.closed_form = Rational((2 * N - 1) * d * d, 3 * (N - 1)) +
                    Rational((N - 2) * d, 6) +
                    Rational(N * gamma * gamma - binom2(g + 1));
  res.direct_weight = res.semigroup.weight();
  res.weights_agree =
      res.closed_form.integral() && res.closed_form.num == res.direct_weight;
  append_weight_notes(res);
  return res;
}

ConstructionResult construct_snstar(std::int64_t N, std::int64_t g,
                                    std::int64_t gamma) {
  if (g < 0 || gamma < 0)
    fail(ErrorCode::invalid_argument, "g and gamma must be nonnegative");
  if (N < 3 || !is_prime(N))
    fail(ErrorCode::precondition_violated,
         "N = " + std::to_string(N) + " is not an odd prime");
  const std::int64_t half = (N - 1) / 2;
  if (imod(g, half) != 0 || imod(gamma, half) != 0)
    fail(ErrorCode::precondition_violated,
         "(N-1)/2 = " + std::to_string(half) + " must divide both g and gamma");
  if (imod(2 * g / (N - 1), N) == N - 1)
    fail(ErrorCode::precondition_violated,
         "(2g/(N-1)) mod N = " + std::to_string(N - 1) + " is excluded");
  if (g < N * gamma)
    fail(ErrorCode::precondition_violated, "requires g >= N*gamma");
  const std::int64_t u1 = 2 * (g - N * gamma) / (N - 1) + 1;
  if (u1 < 2 * gamma)
    fail(ErrorCode::precondition_violated,
         "u1 = " + std::to_string(u1) + " is below 2*gamma = " +
             std::to_string(2 * gamma) + "; residue classes do not saturate");

  Semigroup s = Semigroup::from_generators({2 * N, (2 * gamma + 1) * N, u1});
  if (s.genus() != g)
    fail(ErrorCode::genus_mismatch,
         "snstar: construction produced genus " + std::to_string(s.genus()) +
             ", expected " + std::to_string(g));

  ConstructionResult res{ConstructionKind::snstar,
                         N,
                         g,
                         gamma,
                         u1,
                         std::nullopt,
                         std::nullopt,
                         std::nullopt,
                         std::move(s),
                         Rational{0},
                         0,
                         false,
                         {}};
  require_hyperelliptic(res.semigroup, N, g, gamma, "snstar");

  const std::int64_t d = g - N * gamma;
  res.closed_form = Rational((2 * N - 1) * d * d, 3 * (N - 1)) +
                    Rational((N - 2) * d, 6) +
                    Rational(d * N * gamma + 2 * N * gamma * gamma +
                             binom2(N) * gamma - binom2(g + 1));
  res.direct_weight = res.semigroup.weight();
  res.weights_agree =
      res.closed_form.integral() && res.closed_form.num == res.direct_weight;
  append_weight_notes(res);
  return res;
}

std::vector<std::vector<std::int64_t>> sn_gap_classes(std::int64_t N,
                                                      std::int64_t g,
                                                      std::int64_t gamma) {
  check_sn_preconditions(N, g, gamma);
  const std::int64_t u1 = sn_u1(N, g, gamma);
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(N));
  for (std::int64_t i = 1; i <= gamma; ++i)
    out[0].push_back((2 * i - 1) * N);
  for (std::int64_t j = 1; j <= N - 1; ++j) {
    const std::int64_t rho = imod(j * u1, N);
    auto& cls = out[static_cast<std::size_t>(rho)];
    for (std::int64_t x = rho; x <= j * u1 - N; x += N) cls.push_back(x);
  }
  return out;
}

}  // namespace semiweight

#include "semiweight/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "semiweight/errors.hpp"
#include "semiweight/numutil.hpp"

namespace semiweight {

namespace {

// Closure sieve over [0, bound] for positive generators.
IntSet closure_bits(const std::vector<std::int64_t>& gens, std::int64_t bound) {
  IntSet bits(bound);
  bits.set(0);
  for (std::int64_t x = 1; x <= bound; ++x) {
    for (std::int64_t gen : gens) {
      if (gen <= x && bits.test(x - gen)) {
        bits.set(x);
        break;
      }
    }
  }
  return bits;
}

// First pair (a, b), a <= b, of positive members with a + b <= limit and
// a + b not a member. Scans smallest a first, then smallest sum.
std::optional<std::pair<std::int64_t, std::int64_t>> closure_violation(
    const IntSet& bits) {
  const std::int64_t limit = bits.limit();
  for (std::int64_t a = 1; 2 * a <= limit; ++a) {
    if (!bits.test(a)) continue;
    for (std::int64_t b = a; a + b <= limit; ++b) {
      if (bits.test(b) && !bits.test(a + b)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace

Semigroup Semigroup::naturals() {
  IntSet bits(1);
  bits.set(0);
  bits.set(1);
  return Semigroup(std::move(bits), 0);
}

Semigroup Semigroup::from_members_unchecked(IntSet members, std::int64_t genus) {
  return Semigroup(std::move(members), genus);
}

Semigroup Semigroup::from_generators(const std::vector<std::int64_t>& gens_in) {
  if (gens_in.empty())
    fail(ErrorCode::empty_generators, "generator list is empty");
  std::vector<std::int64_t> gens(gens_in);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() < 1)
    fail(ErrorCode::invalid_argument,
         "generator " + std::to_string(gens.front()) + " is not positive");

  std::int64_t g = 0;
  for (std::int64_t x : gens) g = std::gcd(g, x);
  if (g != 1)
    fail(ErrorCode::non_coprime_generators,
         "gcd of generators is " + std::to_string(g) + "; complement is infinite");

  const std::int64_t m = gens.front();
  std::int64_t bound = std::max<std::int64_t>(4 * gens.back(), 64);
  constexpr std::int64_t kMaxBound = std::int64_t{1} << 27;
  for (;; bound *= 2) {
    if (bound > kMaxBound)
      fail(ErrorCode::resource_limit, "generators too large for the closure sieve");
    IntSet bits = closure_bits(gens, bound);
    // Conductor found once m consecutive members appear: everything above
    // the run start is reachable by adding copies of m.
    std::int64_t run = 0, run_start = -1;
    for (std::int64_t x = 0; x <= bound; ++x) {
      if (bits.test(x)) {
        if (run == 0) run_start = x;
        if (++run == m) break;
      } else {
        run = 0;
      }
    }
    if (run < m) continue;
    std::int64_t genus = 0;
    for (std::int64_t x = 1; x < run_start; ++x)
      if (!bits.test(x)) ++genus;
    const std::int64_t window = std::max<std::int64_t>(2 * genus, 1);
    IntSet members(window);
    for (std::int64_t x = 0; x <= window; ++x)
      if (x >= run_start || (x <= bound && bits.test(x))) members.set(x);
    return Semigroup(std::move(members), genus);
  }
}

Semigroup Semigroup::from_truncation(const std::vector<std::int64_t>& trunc,
                                     std::int64_t genus) {
  if (genus < 0) fail(ErrorCode::invalid_argument, "genus must be nonnegative");
  std::vector<std::int64_t> t(trunc);
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  if (t.size() != trunc.size())
    fail(ErrorCode::invalid_argument, "truncation contains duplicates");
  if (static_cast<std::int64_t>(t.size()) != genus)
    fail(ErrorCode::wrong_cardinality,
         "truncation has " + std::to_string(t.size()) + " elements, expected " +
             std::to_string(genus));
  for (std::int64_t x : t)
    if (x < 1 || x > 2 * genus)
      fail(ErrorCode::invalid_argument,
           "truncation element " + std::to_string(x) + " outside [1, " +
               std::to_string(2 * genus) + "]");

  const std::int64_t window = std::max<std::int64_t>(2 * genus, 1);
  IntSet members(window);
  members.set(0);
  for (std::int64_t x : t) members.set(x);
  if (genus == 0) members.set(1);

  if (auto bad = closure_violation(members)) {
    fail(ErrorCode::not_closed,
         "not additively closed: " + std::to_string(bad->first) + " + " +
             std::to_string(bad->second) + " = " +
             std::to_string(bad->first + bad->second) + " is missing");
  }
  return Semigroup(std::move(members), genus);
}

Semigroup Semigroup::from_gaps(const std::vector<std::int64_t>& gaps) {
  std::vector<std::int64_t> gs(gaps);
  std::sort(gs.begin(), gs.end());
  gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
  if (gs.size() != gaps.size())
    fail(ErrorCode::invalid_argument, "gap list contains duplicates");
  const std::int64_t genus = static_cast<std::int64_t>(gs.size());
  if (genus == 0) return naturals();
  if (gs.front() < 1)
    fail(ErrorCode::invalid_argument,
         "gap " + std::to_string(gs.front()) + " is not positive");
  if (gs.back() > 2 * genus - 1)
    fail(ErrorCode::not_closed,
         "gap " + std::to_string(gs.back()) + " exceeds 2*genus - 1 = " +
             std::to_string(2 * genus - 1) +
             "; the complement of any such set has a member pair summing to it");

  const std::int64_t window = 2 * genus;
  IntSet members(window);
  members.set_range(0, window);
  for (std::int64_t x : gs) members.reset(x);
  if (auto bad = closure_violation(members)) {
    fail(ErrorCode::not_closed,
         "complement not additively closed: " + std::to_string(bad->first) +
             " + " + std::to_string(bad->second) + " = " +
             std::to_string(bad->first + bad->second) + " is a gap");
  }
  return Semigroup(std::move(members), genus);
}

std::int64_t Semigroup::multiplicity() const {
  for (std::int64_t x = 1; x <= window(); ++x)
    if (members_.test(x)) return x;
  return window() + 1;
}

std::int64_t Semigroup::conductor() const {
  for (std::int64_t x = window(); x >= 1; --x)
    if (!members_.test(x)) return x + 1;
  return 0;
}

std::vector<std::int64_t> Semigroup::gaps() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (std::int64_t x = 1; x <= window(); ++x)
    if (!members_.test(x)) out.push_back(x);
  return out;
}

std::vector<std::int64_t> Semigroup::truncation() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (std::int64_t x = 1; x <= 2 * genus_; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

std::vector<std::int64_t> Semigroup::generators() const {
  const std::int64_t m = multiplicity();
  const std::int64_t hi = std::max<std::int64_t>(frobenius(), 0) + m;
  std::vector<std::int64_t> out;
  for (std::int64_t y = m; y <= hi; ++y) {
    if (!contains(y)) continue;
    bool minimal = true;
    for (std::int64_t a = m; 2 * a <= y; ++a) {
      if (contains(a) && contains(y - a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(y);
  }
  return out;
}

std::int64_t Semigroup::weight() const {
  std::int64_t w = 0, i = 0;
  for (std::int64_t x = 1; x <= window(); ++x)
    if (!members_.test(x)) w += x - (++i);
  return w;
}

std::int64_t Semigroup::inflection() const {
  std::int64_t s = 0;
  for (std::int64_t x = 1; x <= 2 * genus_; ++x)
    if (contains(x)) s += x;
  return s;
}

WeightReport Semigroup::weight_report() const {
  WeightReport r;
  r.genus = genus_;
  r.gaps = gaps();
  std::int64_t i = 0;
  for (std::int64_t x : r.gaps) r.weight += x - (++i);
  r.inflection = inflection();
  return r;
}

bool Semigroup::gap_less(const Semigroup& a, const Semigroup& b) {
  if (a.genus_ != b.genus_) return a.genus_ < b.genus_;
  return a.gaps() < b.gaps();
}

std::vector<std::int64_t> sumset(const std::vector<std::int64_t>& a,
                                 const std::vector<std::int64_t>& b,
                                 std::optional<std::int64_t> cap) {
  for (const auto* v : {&a, &b})
    for (std::int64_t x : *v)
      if (x < 0)
        fail(ErrorCode::invalid_argument, "sumset entries must be nonnegative");
  if (a.empty() || b.empty()) return {};
  const std::int64_t ma = *std::max_element(a.begin(), a.end());
  const std::int64_t mb = *std::max_element(b.begin(), b.end());
  std::int64_t bound = ma + mb;
  if (cap && *cap < bound) bound = *cap;
  if (bound < 0) return {};
  IntSet sa(ma), sb(mb);
  for (std::int64_t x : a) sa.set(x);
  for (std::int64_t x : b) sb.set(x);
  return sumset_bits(sa, sb, bound).values();
}

}  // namespace semiweight

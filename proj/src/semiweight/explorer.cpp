#include "semiweight/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "semiweight/constructions.hpp"
#include "semiweight/errors.hpp"

namespace semiweight {

namespace {

// Known counts by genus; the estimator extends the tail geometrically.
constexpr std::int64_t kKnownCounts[] = {
    1,    1,    2,    4,    7,    12,   23,   39,   67,  118,
    204,  343,  592,  1001, 1693, 2857, 4806, 8045, 13467};
constexpr int kKnownMax = 18;

std::uint64_t estimated_tree_nodes(std::int64_t g) {
  long double total = 0, last = 0;
  for (std::int64_t k = 0; k <= g; ++k) {
    long double c = k <= kKnownMax ? static_cast<long double>(kKnownCounts[k])
                                   : last * 1.7L;
    last = c;
    total += c;
    if (total > 1e18L) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(total);
}

// A node of the semigroup tree. Membership bits live over a fixed universe
// [0, 3*G + 2]; removable generators and minimality witnesses never exceed
// 3*genus for a genus <= G node.
struct Node {
  IntSet members;
  std::int64_t genus = 0;
  std::int64_t frob = -1;  // removals so far keep frob = last removed value
  std::int64_t mult = 1;
};

Node root_node(std::int64_t universe) {
  Node n;
  n.members = IntSet(universe);
  n.members.set_range(0, universe);
  return n;
}

// Minimal generators greater than the Frobenius number, ascending. They all
// lie in (frob, max(frob, 0) + mult].
void effective_generators(const Node& nd, std::vector<std::int64_t>& out) {
  out.clear();
  const std::int64_t lo = std::max(nd.frob + 1, nd.mult);
  const std::int64_t hi = std::max<std::int64_t>(nd.frob, 0) + nd.mult;
  for (std::int64_t y = lo; y <= hi; ++y) {
    if (!nd.members.test(y)) continue;
    bool minimal = true;
    for (std::int64_t a = nd.mult; 2 * a <= y; ++a) {
      if (nd.members.test(a) && nd.members.test(y - a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(y);
  }
}

Node make_child(const Node& nd, std::int64_t removed) {
  Node child;
  child.members = nd.members;
  child.members.reset(removed);
  child.genus = nd.genus + 1;
  child.frob = removed;
  child.mult = nd.mult;
  if (removed == nd.mult) {
    std::int64_t m = nd.mult + 1;
    while (!child.members.test(m)) ++m;
    child.mult = m;
  }
  return child;
}

// Subtree pruning for (N, gamma) family enumeration. Everything at or below
// the node's Frobenius number is pinned: descendants only remove generators
// above it. Returns true when no descendant can satisfy the conditions.
struct HyperPrune {
  std::int64_t N = 0, gamma = 0;

  bool cut(const Node& nd) const {
    const auto member = [&](std::int64_t x) {
      return x > nd.frob || nd.members.test(x);
    };
    if (!member((2 * gamma + 1) * N)) return true;
    if (gamma == 0) return false;
    const std::int64_t limit = 2 * gamma * N;
    if (!member(limit)) return true;
    std::int64_t count = 0;
    const std::int64_t pinned = std::min(nd.frob, limit);
    for (std::int64_t x = 1; x <= pinned; ++x) {
      if (!nd.members.test(x)) continue;
      if (x % N != 0) return true;  // pinned non-multiple below 2*gamma*N
      ++count;
    }
    if (limit > nd.frob) count += limit - std::max<std::int64_t>(nd.frob, 0);
    return count < gamma;  // members only disappear along tree paths
  }
};

struct TreeQuery {
  std::int64_t target_genus = 0;
  std::int64_t universe = 0;
  std::optional<HyperPrune> prune;
  std::uint64_t node_cap = 0;
};

void dfs(const TreeQuery& q, const Node& nd, std::atomic<std::uint64_t>& nodes,
         std::vector<Node>& out) {
  if (nodes.fetch_add(1, std::memory_order_relaxed) >= q.node_cap)
    fail(ErrorCode::resource_limit,
         "tree node budget of " + std::to_string(q.node_cap) + " exhausted");
  if (q.prune && q.prune->cut(nd)) return;
  if (nd.genus == q.target_genus) {
    out.push_back(nd);
    return;
  }
  std::vector<std::int64_t> gens;
  effective_generators(nd, gens);
  for (std::int64_t y : gens) dfs(q, make_child(nd, y), nodes, out);
}

Semigroup finish(const Node& nd, std::int64_t g) {
  const std::int64_t window = std::max<std::int64_t>(2 * g, 1);
  IntSet members(window);
  for (std::int64_t x = 0; x <= window; ++x)
    if (nd.members.test(x)) members.set(x);
  return Semigroup::from_members_unchecked(std::move(members), g);
}

std::vector<Semigroup> run_tree(const TreeQuery& q, const ExploreOptions& opt) {
  std::atomic<std::uint64_t> nodes{0};
  std::vector<Node> frontier;
  {
    TreeQuery head = q;
    head.target_genus = std::min<std::int64_t>(q.target_genus, opt.split_depth);
    dfs(head, root_node(q.universe), nodes, frontier);
  }

  std::vector<std::vector<Node>> slots(frontier.size());
  const int workers =
      std::max(1, std::min<int>(opt.workers, static_cast<int>(frontier.size())));
  if (q.target_genus > opt.split_depth && !frontier.empty()) {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(frontier.size());
    auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= frontier.size()) return;
        try {
          dfs(q, frontier[i], nodes, slots[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int t = 0; t < workers; ++t) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  } else {
    slots.resize(1);
    slots[0] = std::move(frontier);
  }

  std::vector<Semigroup> result;
  for (const auto& slot : slots)
    for (const Node& nd : slot) result.push_back(finish(nd, q.target_genus));
  std::sort(result.begin(), result.end(), Semigroup::gap_less);
  return result;
}

}  // namespace

std::vector<Semigroup> enumerate_genus(std::int64_t g,
                                       const ExploreOptions& options) {
  if (g < 0) fail(ErrorCode::invalid_argument, "genus must be nonnegative");
  if (estimated_tree_nodes(g) > options.node_cap)
    fail(ErrorCode::resource_limit,
         "estimated tree size for genus " + std::to_string(g) +
             " exceeds the node cap of " + std::to_string(options.node_cap));
  TreeQuery q;
  q.target_genus = g;
  q.universe = 3 * g + 2;
  q.node_cap = options.node_cap;
  return run_tree(q, options);
}

std::vector<Semigroup> enumerate_hyperelliptic(const HyperParams& params,
                                               const ExploreOptions& options) {
  if (params.N < 2) fail(ErrorCode::invalid_argument, "N must be at least 2");
  if (params.gamma < 0 || params.genus < 0)
    fail(ErrorCode::invalid_argument, "gamma and genus must be nonnegative");
  TreeQuery q;
  q.target_genus = params.genus;
  q.universe = std::max(3 * params.genus + 2, (2 * params.gamma + 1) * params.N);
  q.prune = HyperPrune{params.N, params.gamma};
  q.node_cap = options.node_cap;
  std::vector<Semigroup> family = run_tree(q, options);
  std::erase_if(family, [&](const Semigroup& s) {
    return !is_hyperelliptic(s, params);
  });
  return family;
}

SearchResult search_max_weight(const HyperParams& params,
                               const ExploreOptions& options) {
  SearchResult res;
  res.params = params;
  std::vector<Semigroup> family = enumerate_hyperelliptic(params, options);
  res.family_size = static_cast<std::int64_t>(family.size());
  if (!family.empty()) {
    std::int64_t best = family.front().weight();
    std::vector<std::int64_t> weights;
    weights.reserve(family.size());
    for (const Semigroup& s : family) {
      const std::int64_t w = s.weight();
      weights.push_back(w);
      best = std::max(best, w);
    }
    for (std::size_t i = 0; i < family.size(); ++i)
      if (weights[i] == best) res.argmax.push_back(family[i]);
    res.max_weight = best;
  }
  if (params.N == 3) {
    try {
      const ConstructionResult bc = construct_bc(params.genus, params.gamma);
      res.matches_bc = res.argmax.size() == 1 && res.argmax[0] == bc.semigroup;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::construction_out_of_domain) throw;
    }
  }
  return res;
}

ThresholdScan threshold_scan(std::int64_t N, std::int64_t gamma,
                             std::int64_t g_lo, std::int64_t g_hi,
                             const ExploreOptions& options) {
  if (g_lo > g_hi)
    fail(ErrorCode::invalid_argument, "g_lo must not exceed g_hi");
  ThresholdScan scan;
  scan.N = N;
  scan.gamma = gamma;
  scan.g_lo = g_lo;
  scan.g_hi = g_hi;
  scan.reference = N == 2               ? "torres_upper"
                   : N == 3             ? "bc"
                   : is_prime(N)        ? "sn"
                                        : "none";

  for (std::int64_t g = g_lo; g <= g_hi; ++g) {
    ThresholdRow row;
    row.g = g;
    const SearchResult sr = search_max_weight({N, gamma, g}, options);
    row.family_size = sr.family_size;
    row.max_weight = sr.max_weight;
    if (N == 2) {
      if (g >= 2 * gamma) row.ref_weight = torres_bounds(gamma, g).second;
    } else if (N == 3) {
      try {
        row.ref_weight = construct_bc(g, gamma).direct_weight;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::construction_out_of_domain) throw;
      }
    } else if (is_prime(N)) {
      try {
        row.ref_weight = construct_sn(N, g, gamma).direct_weight;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::precondition_violated &&
            e.code() != ErrorCode::construction_out_of_domain)
          throw;
      }
    }
    if (row.ref_weight)
      row.equal = row.max_weight && *row.max_weight == *row.ref_weight;
    scan.rows.push_back(row);
  }

  // g_star: first genus from which every later compared row agrees.
  for (std::size_t i = 0; i < scan.rows.size(); ++i) {
    bool any_compared = false, all_equal = true;
    for (std::size_t j = i; j < scan.rows.size(); ++j) {
      if (!scan.rows[j].equal.has_value()) continue;
      any_compared = true;
      all_equal = all_equal && *scan.rows[j].equal;
    }
    if (any_compared && all_equal) {
      scan.g_star = scan.rows[i].g;
      break;
    }
  }
  return scan;
}

}  // namespace semiweight

#include <cekr/setvalues.hpp>

#include <cekr/clique.hpp>
#include <cekr/counting.hpp>
#include <cekr/error.hpp>

#include <algorithm>
#include <bit>
#include <utility>
#include <vector>

namespace cekr {

BigCount hilton_milner(int n, int k) {
  // k = 1 is excluded: intersecting 1-set families are single sets, which
  // always have a common element, so no nontrivial family exists at all
  // (the formula would claim 1).
  require(k >= 2, errc::out_of_range, "k must be at least 2");
  require(n > 2 * k, errc::out_of_range,
          "the nontrivial-family bound needs n > 2k (below that, disjointness is impossible)");
  return binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1;
}

namespace {

void check_nu_params(int n, int k, int t) {
  require(t >= 1 && t <= k && k <= n, errc::out_of_range, "need 1 <= t <= k <= n");
}

// Ascending-mask order over all k-subsets of [n] (element e is bit e-1).
std::vector<std::uint64_t> ksubsets(int n, int k) {
  require(n <= 20, errc::resource_guard, "k-subset enumeration capped at n = 20");
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask)
    if (std::popcount(mask) == k) out.push_back(mask);
  return out;
}

}  // namespace

BigCount frankl_nu1_enumerated(int n, int k, int t) {
  check_nu_params(n, k, t);
  std::uint64_t window = (1ULL << std::min(t + 2, n)) - 1;  // [t+2], clipped to [n]
  BigCount count = 0;
  for (std::uint64_t v : ksubsets(n, k))
    if (std::popcount(v & window) >= t + 1) ++count;
  return count;
}

BigCount frankl_nu1_formula(int n, int k, int t) {
  check_nu_params(n, k, t);
  require(n >= t + 2, errc::out_of_range, "the binomial form needs [t+2] inside [n]");
  BigCount total = 0;
  for (int s = t + 1; s <= std::min(t + 2, k); ++s) total += binom(t + 2, s) * binom(n - t - 2, k - s);
  return total;
}

BigCount frankl_nu1(int n, int k, int t) {
  check_nu_params(n, k, t);
  if (n < t + 2 || n <= 16) return frankl_nu1_enumerated(n, k, t);
  return frankl_nu1_formula(n, k, t);
}

namespace {

void check_nu2_params(int n, int k, int t) {
  require(t >= 1 && t < k && k + 1 <= n, errc::out_of_range, "need 1 <= t < k and k+1 <= n");
}

}  // namespace

BigCount frankl_nu2_enumerated(int n, int k, int t) {
  check_nu2_params(n, k, t);
  std::uint64_t base = (1ULL << t) - 1;                     // [t]
  std::uint64_t tail = ((1ULL << (k + 1)) - 1) & ~base;     // [t+1, k+1]
  std::uint64_t head = (1ULL << (k + 1)) - 1;               // [k+1]
  BigCount count = 0;
  for (std::uint64_t v : ksubsets(n, k)) {
    bool first_block = (v & base) == base && (v & tail) != 0;
    bool second_block = (v & head) == v && std::popcount(head & ~v) == 1 && (head & ~v & base) != 0;
    if (first_block || second_block) ++count;
  }
  return count;
}

BigCount frankl_nu2_formula(int n, int k, int t) {
  check_nu2_params(n, k, t);
  return binom(n - t, k - t) - binom(n - k - 1, k - t) + t;
}

BigCount frankl_nu2(int n, int k, int t) {
  check_nu2_params(n, k, t);
  if (n <= 16) return frankl_nu2_enumerated(n, k, t);
  return frankl_nu2_formula(n, k, t);
}

BigCount ak_m(int n, int k, int t) {
  check_nu_params(n, k, t);
  BigCount best = 0;
  for (int r = 0; t + 2 * r <= n; ++r) {
    BigCount value = 0;
    for (int i = t + r; i <= std::min(t + 2 * r, k); ++i)
      value += binom(t + 2 * r, i) * binom(n - t - 2 * r, k - i);
    best = std::max(best, value);
  }
  return best;
}

KsetSearchResult max_intersecting_ksets(int n, int k, int t, bool nontrivial_only,
                                        std::uint64_t node_budget) {
  check_nu_params(n, k, t);
  require(n <= 16, errc::resource_guard, "set-family search capped at n = 16");
  std::vector<std::uint64_t> sets = ksubsets(n, k);
  int order = static_cast<int>(sets.size());
  DenseGraph g(order);
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (std::popcount(sets[a] & sets[b]) >= t) g.add_edge(a, b);

  CliqueHooks hooks;
  if (nontrivial_only) {
    // star_rows[e] = vertices whose set contains element e+1, as a graph-width
    // bitset; a subtree is dead once t elements are common to every current
    // member and to every remaining candidate.
    std::vector<std::vector<std::uint64_t>> star_rows(n, std::vector<std::uint64_t>(g.words(), 0));
    for (int v = 0; v < order; ++v)
      for (int e = 0; e < n; ++e)
        if (sets[v] >> e & 1) star_rows[e][v / 64] |= 1ULL << (v % 64);
    hooks.qualified = [sets, t](const std::vector<int>& clique) {
      std::uint64_t common = ~0ULL;
      for (int v : clique) common &= sets[v];
      return std::popcount(common) < t;
    };
    hooks.blocked = [sets, star_rows, t, words = g.words()](const std::vector<int>& clique,
                                                            const std::uint64_t* candidates) {
      if (clique.empty()) return false;
      std::uint64_t common = ~0ULL;
      for (int v : clique) common &= sets[v];
      int locked = 0;
      std::uint64_t bits = common;
      while (bits) {
        int e = std::countr_zero(bits);
        bits &= bits - 1;
        bool covers = true;
        for (int w = 0; w < words; ++w)
          if (candidates[w] & ~star_rows[e][w]) {
            covers = false;
            break;
          }
        if (covers && ++locked >= t) return true;
      }
      return false;
    };
    // While >= t elements are still common to the whole clique, a qualified
    // extension must break below t, so for any t of those elements it contains
    // a member missing one of them.  Branch only on candidates missing one of
    // the t cheapest locked elements; an empty union proves the subtree dead.
    hooks.unlockers = [sets, star_rows, t, n, words = g.words()](
                          const std::vector<int>& clique, const std::uint64_t* candidates,
                          std::uint64_t* out) {
      std::uint64_t common = (1ULL << n) - 1;
      for (int v : clique) common &= sets[v];
      std::vector<std::pair<int, int>> cost;  // (#candidates missing e, e)
      std::uint64_t bits = common;
      while (bits) {
        int e = std::countr_zero(bits);
        bits &= bits - 1;
        int missing = 0;
        for (int w = 0; w < words; ++w)
          missing += std::popcount(candidates[w] & ~star_rows[e][w]);
        cost.emplace_back(missing, e);
      }
      std::sort(cost.begin(), cost.end());
      for (int j = 0; j < t && j < static_cast<int>(cost.size()); ++j)
        for (int w = 0; w < words; ++w)
          out[w] |= candidates[w] & ~star_rows[cost[j].second][w];
      return true;
    };
  }

  // Warm-start bound from an explicitly exhibited family of the searched
  // kind, counted by direct enumeration (never from a formula under test):
  //  - trivial mode: the best window family {V : |V cap [t+2r]| >= t+r}; two
  //    members meet in >= 2(t+r) - (t+2r) = t window elements;
  //  - nontrivial mode at t = 1: all sets containing 1 that meet [2..k+1],
  //    plus [2..k+1] itself; no element is common to the whole family.
  int seed = 0;
  if (!nontrivial_only) {
    for (int r = 0; t + 2 * r <= n; ++r) {
      std::uint64_t window = (1ULL << (t + 2 * r)) - 1;
      int count = 0;
      for (std::uint64_t v : sets)
        if (std::popcount(v & window) >= t + r) ++count;
      seed = std::max(seed, count);
    }
  } else if (t == 1 && k >= 2 && n >= k + 1) {
    std::uint64_t window = ((1ULL << (k + 1)) - 1) & ~1ULL;  // elements 2..k+1
    int count = 1;                                           // the window itself
    for (std::uint64_t v : sets)
      if ((v & 1) && (v & window)) ++count;
    seed = count;
  }

  // Both the adjacency predicate and the hooks only look at intersection
  // PATTERNS, so any relabeling of [n] maps maximum families to maximum
  // families.  Relabeling can send any chosen member to [k]; hence some
  // maximum family contains [k], and the search may be rooted there.  [k] is
  // the smallest k-bit mask, which ksubsets emits first.
  CliqueSearchResult res = max_qualified_clique_size(g, hooks, node_budget, seed, 0);
  return {res.best, res.nodes};
}

}  // namespace cekr

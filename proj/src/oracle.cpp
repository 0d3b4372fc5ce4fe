#include <cekr/oracle.hpp>

#include <cekr/clique.hpp>
#include <cekr/counting.hpp>
#include <cekr/error.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <utility>
#include <vector>

namespace cekr {

std::string oracle_mode_name(OracleMode mode) {
  return mode == OracleMode::trivial_allowed ? "trivial-allowed" : "nontrivial-only";
}

namespace {

// S_n as a conflict-free search graph: vertex ids follow the canonical
// permutation order (that is what makes "lexicographically least witness"
// meaningful), edges join pairs sharing at least t cycles.  Cycles are
// interned so family-level cycle intersections reduce to bitset ANDs.
struct PermGraph {
  std::vector<Permutation> perms;
  DenseGraph graph;
  int cycle_words = 0;
  std::vector<std::vector<std::uint64_t>> perm_cycles;  // per vertex, cycle-id bitset
  std::vector<std::vector<std::uint64_t>> cycle_star;   // per cycle id, vertex bitset

  explicit PermGraph(int n, int t) : perms(enumerate_sn(n)), graph(static_cast<int>(perms.size())) {
    int order = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> cycle_ids;
    std::vector<std::vector<int>> containing;  // cycle id -> vertices
    for (int v = 0; v < order; ++v)
      for (const std::vector<int>& c : perms[v].cycles()) {
        auto [it, fresh] = cycle_ids.emplace(c, static_cast<int>(cycle_ids.size()));
        if (fresh) containing.emplace_back();
        containing[it->second].push_back(v);
      }
    int n_cycles = static_cast<int>(cycle_ids.size());
    cycle_words = (n_cycles + 63) / 64;
    perm_cycles.assign(order, std::vector<std::uint64_t>(cycle_words, 0));
    for (int v = 0; v < order; ++v)
      for (const std::vector<int>& c : perms[v].cycles()) {
        int id = cycle_ids.at(c);
        perm_cycles[v][id / 64] |= 1ULL << (id % 64);
      }
    cycle_star.assign(n_cycles, std::vector<std::uint64_t>(graph.words(), 0));
    for (int id = 0; id < n_cycles; ++id)
      for (int v : containing[id]) cycle_star[id][v / 64] |= 1ULL << (v % 64);
    for (int a = 0; a < order; ++a)
      for (int b = a + 1; b < order; ++b) {
        int shared = 0;
        for (int w = 0; w < cycle_words; ++w)
          shared += std::popcount(perm_cycles[a][w] & perm_cycles[b][w]);
        if (shared >= t) graph.add_edge(a, b);
      }
  }

  CliqueHooks hooks(int t, OracleMode mode) const {
    CliqueHooks h;
    if (mode != OracleMode::nontrivial_only) return h;
    h.qualified = [this, t](const std::vector<int>& clique) {
      std::vector<std::uint64_t> common(cycle_words, ~0ULL);
      for (int v : clique)
        for (int w = 0; w < cycle_words; ++w) common[w] &= perm_cycles[v][w];
      int shared = 0;
      for (std::uint64_t word : common) shared += std::popcount(word);
      return shared < t;
    };
    h.blocked = [this, t](const std::vector<int>& clique, const std::uint64_t* candidates) {
      if (clique.empty()) return false;
      std::vector<std::uint64_t> common(cycle_words, ~0ULL);
      for (int v : clique)
        for (int w = 0; w < cycle_words; ++w) common[w] &= perm_cycles[v][w];
      // The subtree is dead once t of the clique's common cycles are also
      // present in every remaining candidate: no extension can shed them.
      int locked = 0;
      int graph_words = graph.words();
      for (int w = 0; w < cycle_words; ++w) {
        std::uint64_t bits = common[w];
        while (bits) {
          int id = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          bool covers = true;
          for (int gw = 0; gw < graph_words; ++gw)
            if (candidates[gw] & ~cycle_star[id][gw]) {
              covers = false;
              break;
            }
          if (covers && ++locked >= t) return true;
        }
      }
      return false;
    };
    // While the clique still shares >= t cycles, any qualified extension must
    // drop below t, so for any t of the shared cycles it contains a member
    // missing one of them.  Branching can be restricted to candidates missing
    // one of the t cheapest shared cycles.
    h.unlockers = [this, t](const std::vector<int>& clique, const std::uint64_t* candidates,
                            std::uint64_t* out) {
      int n_cycles = static_cast<int>(cycle_star.size());
      std::vector<std::uint64_t> common(cycle_words, ~0ULL);
      if (cycle_words > 0 && n_cycles % 64 != 0)
        common[cycle_words - 1] = (1ULL << (n_cycles % 64)) - 1;
      for (int v : clique)
        for (int w = 0; w < cycle_words; ++w) common[w] &= perm_cycles[v][w];
      int graph_words = graph.words();
      std::vector<std::pair<int, int>> cost;  // (#candidates missing the cycle, cycle id)
      for (int w = 0; w < cycle_words; ++w) {
        std::uint64_t bits = common[w];
        while (bits) {
          int id = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          int missing = 0;
          for (int gw = 0; gw < graph_words; ++gw)
            missing += std::popcount(candidates[gw] & ~cycle_star[id][gw]);
          cost.emplace_back(missing, id);
        }
      }
      std::sort(cost.begin(), cost.end());
      for (int j = 0; j < t && j < static_cast<int>(cost.size()); ++j)
        for (int gw = 0; gw < graph_words; ++gw)
          out[gw] |= candidates[gw] & ~cycle_star[cost[j].second][gw];
      return true;
    };
    return h;
  }

  PermFamily family_of(const std::vector<int>& clique, int n) const {
    PermFamily fam(n);
    for (int v : clique) fam.insert(perms[v]);
    return fam;
  }
};

void check_clique_instance(int n, int t, const OracleOptions& opts) {
  require(t >= 1 && t <= n, errc::out_of_range, "need 1 <= t <= n");
  require(opts.clique_bound <= 6, errc::resource_guard,
          "the permutation search is hard-capped at n = 6");
  require(n <= opts.clique_bound, errc::resource_guard,
          "n exceeds the permutation search bound (n = 6 requires explicit opt-in)");
}

}  // namespace

OracleResult max_clique_exact(int n, int t, OracleMode mode, const OracleOptions& opts) {
  check_clique_instance(n, t, opts);
  PermGraph pg(n, t);
  CliqueSearchResult found = max_qualified_clique(pg.graph, pg.hooks(t, mode), opts.node_budget);
  OracleResult result;
  result.n = n;
  result.t = t;
  result.mode = mode;
  result.maximum = found.best;
  result.witness = pg.family_of(found.witness, n);
  result.exhaustive = true;
  result.node_count = found.nodes;
  return result;
}

std::vector<PermFamily> enumerate_maximizers(int n, int t, OracleMode mode,
                                             const OracleOptions& opts) {
  check_clique_instance(n, t, opts);
  PermGraph pg(n, t);
  CliqueHooks hooks = pg.hooks(t, mode);
  CliqueSearchResult found = max_qualified_clique(pg.graph, hooks, opts.node_budget);
  if (found.best == 0) return {};
  std::vector<std::vector<int>> cliques =
      all_maximum_cliques(pg.graph, hooks, found.best, opts.node_budget);
  std::vector<PermFamily> families;
  families.reserve(cliques.size());
  for (const std::vector<int>& clique : cliques) families.push_back(pg.family_of(clique, n));
  std::sort(families.begin(), families.end());
  return families;
}

namespace {

// Generator search state over ground set [1..n], n <= 6: a family of subsets
// of [n] is one 64-bit word (bit s = subset mask s), so upsets, unions and
// derangement-weighted sums all stay in registers.
struct GeneratorSearch {
  int n;
  int t;
  bool nontrivial;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  int universe;                           // 2^n subsets
  std::vector<std::uint64_t> supersets;   // per subset, bitmap of its supersets
  std::vector<std::uint64_t> weight;      // per subset s, derangements(n - |s|)
  std::uint64_t best_value = 0;
  std::uint64_t best_upset = 0;

  GeneratorSearch(int n_in, int t_in, bool nontrivial_in, std::uint64_t budget_in)
      : n(n_in), t(t_in), nontrivial(nontrivial_in), budget(budget_in), universe(1 << n) {
    supersets.assign(universe, 0);
    weight.assign(universe, 0);
    for (int s = 0; s < universe; ++s) {
      weight[s] = static_cast<std::uint64_t>(derangements(n - std::popcount(static_cast<unsigned>(s))));
      for (int u = s;; u = (u + 1) | s) {  // standard superset walk
        supersets[s] |= 1ULL << u;
        if (u == universe - 1) break;
      }
    }
  }

  std::uint64_t value(std::uint64_t upset_bits) const {
    std::uint64_t total = 0;
    while (upset_bits) {
      total += weight[std::countr_zero(upset_bits)];
      upset_bits &= upset_bits - 1;
    }
    return total;
  }

  bool qualifies(std::uint64_t upset_bits) const {
    if (!nontrivial) return true;
    // Common fixed points of the generated family: intersect the upset
    // members that some permutation actually realizes as its fixed-point set
    // (a permutation never fixes exactly n-1 points).
    int common = universe - 1;
    std::uint64_t bits = upset_bits;
    while (bits) {
      int s = std::countr_zero(bits);
      bits &= bits - 1;
      if (std::popcount(static_cast<unsigned>(s)) != n - 1) common &= s;
    }
    return std::popcount(static_cast<unsigned>(common)) < t;
  }

  void search(std::uint64_t upset_bits, const std::vector<int>& pool) {
    if (++nodes > budget)
      fail(errc::resource_guard, "generator search exceeded the node budget");
    std::uint64_t reach = upset_bits;
    for (int s : pool) reach |= supersets[s];
    if (value(reach) <= best_value) return;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      int s = pool[k];
      std::uint64_t extended = upset_bits | supersets[s];
      std::uint64_t extended_value = value(extended);
      if (extended_value > best_value && qualifies(extended)) {
        best_value = extended_value;
        best_upset = extended;
      }
      std::vector<int> narrowed;
      for (std::size_t m = k + 1; m < pool.size(); ++m) {
        int other = pool[m];
        if ((s & other) == s || (s & other) == other) continue;  // containment
        if (std::popcount(static_cast<unsigned>(s & other)) < t) continue;
        narrowed.push_back(other);
      }
      if (!narrowed.empty()) search(extended, narrowed);
    }
  }
};

}  // namespace

OracleResult structured_max(int n, int t, OracleMode mode, const OracleOptions& opts) {
  require(t >= 1 && t <= n, errc::out_of_range, "need 1 <= t <= n");
  require(opts.structured_bound <= 6, errc::resource_guard,
          "the generator search is hard-capped at n = 6");
  require(n <= opts.structured_bound, errc::resource_guard,
          "n exceeds the generator search bound");

  GeneratorSearch search(n, t, mode == OracleMode::nontrivial_only, opts.node_budget);
  // Candidate generators: at least t elements (a generator meets itself),
  // never exactly n-1 (such a set adds only the identity, which the full set
  // already contributes), ordered small-to-large so high-value generators
  // are tried first.
  std::vector<int> pool;
  for (int s = 1; s < search.universe; ++s) {
    int size = std::popcount(static_cast<unsigned>(s));
    if (size >= t && size != n - 1) pool.push_back(s);
  }
  std::sort(pool.begin(), pool.end(), [](int a, int b) {
    int pa = std::popcount(static_cast<unsigned>(a));
    int pb = std::popcount(static_cast<unsigned>(b));
    return pa != pb ? pa < pb : a < b;
  });
  search.search(0, pool);

  OracleResult result;
  result.n = n;
  result.t = t;
  result.mode = mode;
  result.maximum = search.best_value;
  result.witness = PermFamily(n);
  if (search.best_value > 0)
    for (const Permutation& p : enumerate_sn(n))
      if (search.best_upset >> p.fixed_points().bits() & 1) result.witness.insert(p);
  result.exhaustive = true;
  result.node_count = search.nodes;
  return result;
}

}  // namespace cekr

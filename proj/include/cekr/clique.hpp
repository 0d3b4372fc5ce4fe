#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace cekr {

// Undirected graph on vertices 0..order-1 with one bitset row per vertex.
class DenseGraph {
 public:
  explicit DenseGraph(int order);

  int order() const { return order_; }
  int words() const { return words_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  const std::uint64_t* row(int v) const {
    return rows_.data() + static_cast<std::size_t>(v) * words_;
  }

 private:
  int order_;
  int words_;
  std::vector<std::uint64_t> rows_;
};

// Hooks for searches where only "qualified" cliques count toward the maximum
// (e.g. families whose common structure is small enough).
//
//  - qualified(C): may be null, meaning every nonempty clique counts.
//    Qualification MUST be monotone: every superset of a qualified clique is
//    qualified. The engine relies on this and stops re-checking once true.
//  - blocked(C, P): may be null. Admissible subtree cutoff: return true only
//    when NO qualified clique can be assembled from C plus any subset of the
//    candidate bitset P (words() words). Never consulted once C is qualified.
//  - unlockers(C, P, U): may be null. Branch restriction for the size-only
//    search while C is not yet qualified: write into U (words() words) a
//    subset of P such that EVERY qualified clique extending C from P contains
//    at least one U vertex, and return true; or return false for no
//    restriction. An all-zero U with a true return asserts no qualified
//    extension exists at all. Never consulted once C is qualified.
struct CliqueHooks {
  std::function<bool(const std::vector<int>&)> qualified;
  std::function<bool(const std::vector<int>&, const std::uint64_t*)> blocked;
  std::function<bool(const std::vector<int>&, const std::uint64_t*, std::uint64_t*)> unlockers;
};

struct CliqueSearchResult {
  int best = 0;              // maximum qualified clique size; 0 when none exists
  std::vector<int> witness;  // lexicographically least maximum clique (ascending ids)
  std::uint64_t nodes = 0;   // search-tree nodes over both phases
};

// Exact maximum qualified clique size with a deterministic witness: the
// search first establishes the maximum with a coloring-bounded
// branch-and-bound, then re-walks the tree in lexicographic vertex order and
// keeps the first maximum clique it meets. Exceeding node_budget raises a
// resource-guard error; partial answers are never returned.
CliqueSearchResult max_qualified_clique(const DenseGraph& g, const CliqueHooks& hooks,
                                        std::uint64_t node_budget);

// Every maximum qualified clique, in lexicographic vertex order. `target`
// must be the exact maximum qualified clique size (normally the `best` field
// from max_qualified_clique); the enumeration relies on maximality to stop
// descending at that depth.
std::vector<std::vector<int>> all_maximum_cliques(const DenseGraph& g, const CliqueHooks& hooks,
                                                  int target, std::uint64_t node_budget);

// Exact maximum qualified clique size without the witness pass.  seed_best
// must be the size of a qualified clique the caller has already exhibited
// (0 when none is known): the bound starts there, which prunes most of the
// tree when the seed is optimal, and the result is the true maximum, never
// less than the seed.  When forced_vertex is >= 0, only cliques containing
// that vertex are searched; the caller must guarantee (typically by a
// symmetry of both the graph and the hooks) that some maximum qualified
// clique contains it.  The witness field is left empty.
CliqueSearchResult max_qualified_clique_size(const DenseGraph& g, const CliqueHooks& hooks,
                                             std::uint64_t node_budget, int seed_best = 0,
                                             int forced_vertex = -1);

}  // namespace cekr

#include <cekr/clique.hpp>

#include <cekr/error.hpp>

#include <bit>
#include <deque>
#include <limits>

namespace cekr {

DenseGraph::DenseGraph(int order) : order_(order), words_((order + 63) / 64) {
  require(order >= 0, errc::out_of_range, "graph order must be non-negative");
  rows_.assign(static_cast<std::size_t>(order_) * words_, 0);
}

void DenseGraph::add_edge(int u, int v) {
  require(u >= 0 && u < order_ && v >= 0 && v < order_, errc::out_of_range,
          "edge endpoint outside the vertex range");
  require(u != v, errc::invalid_argument, "self-loops are not part of a clique structure");
  rows_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ULL << (v % 64);
  rows_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ULL << (u % 64);
}

bool DenseGraph::adjacent(int u, int v) const {
  require(u >= 0 && u < order_ && v >= 0 && v < order_, errc::out_of_range,
          "vertex outside the range");
  return (row(u)[v / 64] >> (v % 64)) & 1;
}

namespace {

using Words = std::vector<std::uint64_t>;

bool any_bit(const Words& w) {
  for (std::uint64_t x : w)
    if (x) return true;
  return false;
}

struct Searcher {
  const DenseGraph& g;
  const CliqueHooks& hooks;
  std::uint64_t budget;
  std::uint64_t nodes = 0;

  int best = 0;
  std::vector<int> current;
  bool current_qualified = false;

  // Phase-2 state.
  int target = 0;
  std::size_t result_cap = 0;
  std::vector<std::vector<int>> results;

  // Per-depth scratch buffers: recursion at depth d owns scratch_[d], so the
  // hot loop never allocates once the pools warm up.
  struct Scratch {
    std::vector<Words> classes;
    std::size_t classes_used = 0;
    std::vector<int> order;
    std::vector<int> colors;
    Words narrowed;
  };
  // Deque, not vector: growth must not invalidate the reference a parent
  // recursion level is still holding.
  std::deque<Scratch> scratch_;

  Scratch& scratch(int depth) {
    while (static_cast<std::size_t>(depth) >= scratch_.size()) scratch_.emplace_back();
    return scratch_[static_cast<std::size_t>(depth)];
  }

  void tick() {
    if (++nodes > budget)
      fail(errc::resource_guard, "clique search exceeded the node budget");
  }

  bool push(int v) {
    current.push_back(v);
    bool previous = current_qualified;
    if (!current_qualified)
      current_qualified = !hooks.qualified || hooks.qualified(current);
    return previous;
  }

  void pop(bool previous_qualified) {
    current.pop_back();
    current_qualified = previous_qualified;
  }

  // Greedy sequential coloring of the candidate set. Vertices come back
  // grouped by color class (class k first), so color numbers are
  // nondecreasing along `order` and order[i] can extend the current clique by
  // at most colors[i] more vertices.
  void color_sort(const Words& candidates, Scratch& s) const {
    s.classes_used = 0;
    for (int w = 0; w < g.words(); ++w) {
      std::uint64_t bits = candidates[w];
      while (bits) {
        int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        const std::uint64_t* adj = g.row(v);
        std::size_t k = 0;
        for (; k < s.classes_used; ++k) {
          bool clash = false;
          for (int x = 0; x < g.words(); ++x)
            if (s.classes[k][x] & adj[x]) {
              clash = true;
              break;
            }
          if (!clash) break;
        }
        if (k == s.classes_used) {
          if (s.classes.size() == s.classes_used) s.classes.emplace_back(g.words(), 0);
          s.classes[k].assign(g.words(), 0);
          ++s.classes_used;
        }
        s.classes[k][v / 64] |= 1ULL << (v % 64);
      }
    }
    s.order.clear();
    s.colors.clear();
    for (std::size_t k = 0; k < s.classes_used; ++k)
      for (int w = 0; w < g.words(); ++w) {
        std::uint64_t bits = s.classes[k][w];
        while (bits) {
          s.order.push_back(w * 64 + std::countr_zero(bits));
          s.colors.push_back(static_cast<int>(k) + 1);
          bits &= bits - 1;
        }
      }
  }

  // Phase 1: establish the maximum qualified clique size.
  void expand(Words candidates, int depth) {
    tick();
    if (!current_qualified && hooks.blocked && hooks.blocked(current, candidates.data())) return;
    Scratch& s = scratch(depth);

    // Restricted branching while unqualified: every qualified clique below
    // here contains an unlocker, and one whose least unlocker is u lives in
    // u's subtree because only earlier unlockers have been removed by then.
    // The per-vertex color cutoff is unsound under partial removal, so only
    // the whole-candidate-set bound applies on this path.
    if (!current_qualified && hooks.unlockers) {
      Words u(g.words(), 0);
      if (hooks.unlockers(current, candidates.data(), u.data())) {
        color_sort(candidates, s);
        // Class count of the full candidate set bounds every clique inside
        // it, and candidates only shrink below, so the bound stays valid
        // across the loop as best improves.
        int bound = s.colors.empty() ? 0 : s.colors.back();
        for (int w = 0; w < g.words(); ++w) {
          std::uint64_t bits = u[w] & candidates[w];
          while (bits) {
            if (static_cast<int>(current.size()) + bound <= best) return;
            int v = w * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            bool previous = push(v);
            if (current_qualified && static_cast<int>(current.size()) > best)
              best = static_cast<int>(current.size());
            Words narrowed(g.words());
            const std::uint64_t* adj = g.row(v);
            for (int x = 0; x < g.words(); ++x) narrowed[x] = candidates[x] & adj[x];
            if (any_bit(narrowed)) expand(std::move(narrowed), depth + 1);
            pop(previous);
            candidates[v / 64] &= ~(1ULL << (v % 64));
          }
        }
        return;
      }
    }

    color_sort(candidates, s);
    for (int i = static_cast<int>(s.order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(current.size()) + s.colors[i] <= best) return;
      int v = s.order[i];
      bool previous = push(v);
      if (current_qualified && static_cast<int>(current.size()) > best)
        best = static_cast<int>(current.size());
      s.narrowed.assign(g.words(), 0);
      const std::uint64_t* adj = g.row(v);
      for (int w = 0; w < g.words(); ++w) s.narrowed[w] = candidates[w] & adj[w];
      if (any_bit(s.narrowed)) expand(std::move(s.narrowed), depth + 1);
      pop(previous);
      candidates[v / 64] &= ~(1ULL << (v % 64));
    }
  }

  // Phase 2: walk cliques in lexicographic vertex order, collecting qualified
  // cliques of exactly `target` size. Because target is the maximum, a
  // target-size clique cannot be extended, so recursion stops there. Returns
  // true once result_cap cliques are collected.
  bool lex_walk(const Words& candidates, int depth) {
    tick();
    if (static_cast<int>(current.size()) == target) {
      if (current_qualified) {
        results.push_back(current);
        if (results.size() >= result_cap) return true;
      }
      return false;
    }
    if (!current_qualified && hooks.blocked && hooks.blocked(current, candidates.data())) return false;
    Scratch& s = scratch(depth);
    color_sort(candidates, s);
    int bound = s.colors.empty() ? 0 : s.colors.back();
    if (static_cast<int>(current.size()) + bound < target) return false;
    for (int w = 0; w < g.words(); ++w) {
      std::uint64_t bits = candidates[w];
      while (bits) {
        int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        bool previous = push(v);
        Words narrowed(g.words());
        const std::uint64_t* adj = g.row(v);
        for (int x = 0; x < g.words(); ++x) narrowed[x] = candidates[x] & adj[x];
        // Restrict to vertices after v so each clique appears exactly once,
        // in lexicographic order of its sorted vertex list.
        narrowed[w] &= ~((v % 64 == 63) ? ~0ULL : ((1ULL << (v % 64 + 1)) - 1));
        for (int x = 0; x < w; ++x) narrowed[x] = 0;
        bool done = lex_walk(narrowed, depth + 1);
        pop(previous);
        if (done) return true;
      }
    }
    return false;
  }

  Words full_set() const {
    Words all(g.words(), 0);
    for (int v = 0; v < g.order(); ++v) all[v / 64] |= 1ULL << (v % 64);
    return all;
  }
};

}  // namespace

CliqueSearchResult max_qualified_clique(const DenseGraph& g, const CliqueHooks& hooks,
                                        std::uint64_t node_budget) {
  CliqueSearchResult out;
  if (g.order() == 0) return out;
  Searcher s{g, hooks, node_budget};
  s.expand(s.full_set(), 0);
  out.best = s.best;
  if (s.best > 0) {
    s.target = s.best;
    s.result_cap = 1;
    s.current.clear();
    s.current_qualified = !hooks.qualified;
    s.lex_walk(s.full_set(), 0);
    require(!s.results.empty(), errc::invalid_argument,
            "witness pass failed to rediscover the maximum clique");
    out.witness = s.results.front();
  }
  out.nodes = s.nodes;
  return out;
}

CliqueSearchResult max_qualified_clique_size(const DenseGraph& g, const CliqueHooks& hooks,
                                             std::uint64_t node_budget, int seed_best,
                                             int forced_vertex) {
  require(seed_best >= 0, errc::invalid_argument, "seed size cannot be negative");
  require(forced_vertex < g.order(), errc::out_of_range,
          "forced vertex outside the vertex range");
  CliqueSearchResult out;
  out.best = seed_best;
  if (g.order() == 0) return out;
  Searcher s{g, hooks, node_budget};
  s.best = seed_best;
  if (forced_vertex < 0) {
    s.expand(s.full_set(), 0);
  } else {
    s.push(forced_vertex);
    if (s.current_qualified && s.best < 1) s.best = 1;
    Words candidates(g.words());
    const std::uint64_t* adj = g.row(forced_vertex);
    for (int w = 0; w < g.words(); ++w) candidates[w] = adj[w];
    if (any_bit(candidates)) s.expand(std::move(candidates), 0);
  }
  out.best = s.best;
  out.nodes = s.nodes;
  return out;
}

std::vector<std::vector<int>> all_maximum_cliques(const DenseGraph& g, const CliqueHooks& hooks,
                                                  int target, std::uint64_t node_budget) {
  require(target >= 1, errc::invalid_argument, "clique enumeration needs a positive target size");
  Searcher s{g, hooks, node_budget};
  s.target = target;
  s.result_cap = std::numeric_limits<std::size_t>::max();
  s.current_qualified = !hooks.qualified;
  if (g.order() > 0) s.lex_walk(s.full_set(), 0);
  return std::move(s.results);
}

}  // namespace cekr

#include <cekr/clique.hpp>

#include <cekr/error.hpp>

#include <doctest.h>

#include <cstdint>
#include <vector>

using namespace cekr;

namespace {

DenseGraph cycle_graph(int n) {
  DenseGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("triangle plus pendant: maximum clique and witness") {
  DenseGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  CliqueSearchResult r = max_qualified_clique(g, {}, 1'000'000);
  CHECK(r.best == 3);
  CHECK(r.witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("five-cycle: witness is the lexicographically least edge") {
  CliqueSearchResult r = max_qualified_clique(cycle_graph(5), {}, 1'000'000);
  CHECK(r.best == 2);
  CHECK(r.witness == std::vector<int>{0, 1});
  std::vector<std::vector<int>> all = all_maximum_cliques(cycle_graph(5), {}, 2, 1'000'000);
  CHECK(all.size() == 5);
  CHECK(all.front() == std::vector<int>{0, 1});
  CHECK(all.back() == std::vector<int>{3, 4});
}

TEST_CASE("qualification gates which cliques count") {
  // Two triangles sharing vertex 2; only cliques avoiding vertex 0 qualify.
  DenseGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(2, 4);
  CliqueHooks hooks;
  // "Contains vertex 3" is monotone (supersets of a qualified clique stay
  // qualified), which is what the engine requires of this hook.
  hooks.qualified = [](const std::vector<int>& c) {
    for (int v : c)
      if (v == 3) return true;
    return false;
  };
  CliqueSearchResult r = max_qualified_clique(g, hooks, 1'000'000);
  CHECK(r.best == 3);
  CHECK(r.witness == std::vector<int>{2, 3, 4});
}

TEST_CASE("an exhausted node budget raises the resource guard") {
  // Dense-ish random-free construction: complete 3-partite graph K(4,4,4).
  DenseGraph g(12);
  for (int a = 0; a < 12; ++a)
    for (int b = a + 1; b < 12; ++b)
      if (a / 4 != b / 4) g.add_edge(a, b);
  try {
    max_qualified_clique(g, {}, 3);
    FAIL("budget of 3 nodes should not complete");
  } catch (const error& e) {
    CHECK(e.kind() == errc::resource_guard);
  }
}

TEST_CASE("size-only search accepts a seed and a forced root") {
  DenseGraph g = cycle_graph(6);  // maximum clique 2, vertex-transitive
  CliqueSearchResult plain = max_qualified_clique_size(g, {}, 1'000'000);
  CHECK(plain.best == 2);
  CliqueSearchResult seeded = max_qualified_clique_size(g, {}, 1'000'000, 2);
  CHECK(seeded.best == 2);
  CHECK(seeded.nodes <= plain.nodes);
  CliqueSearchResult rooted = max_qualified_clique_size(g, {}, 1'000'000, 0, 0);
  CHECK(rooted.best == 2);
}

TEST_CASE("unlockers restrict branching without changing the answer") {
  // K(3,3,3): maximum clique 3 (one vertex per part).  Qualify only cliques
  // containing at least one vertex from the last part {6,7,8}; unlockers
  // steer the search straight to that part.
  DenseGraph g(9);
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b)
      if (a / 3 != b / 3) g.add_edge(a, b);
  CliqueHooks hooks;
  hooks.qualified = [](const std::vector<int>& c) {
    for (int v : c)
      if (v >= 6) return true;
    return false;
  };
  CliqueSearchResult plain = max_qualified_clique_size(g, hooks, 1'000'000);
  hooks.unlockers = [&g](const std::vector<int>&, const std::uint64_t* candidates,
                         std::uint64_t* out) {
    for (int v = 6; v < 9; ++v)
      if (candidates[0] >> v & 1) out[0] |= 1ULL << v;
    return true;
  };
  CliqueSearchResult steered = max_qualified_clique_size(g, hooks, 1'000'000);
  CHECK(plain.best == 3);
  CHECK(steered.best == 3);
  CHECK(steered.nodes <= plain.nodes);
}

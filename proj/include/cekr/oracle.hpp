#pragma once

#include <cekr/bigint.hpp>
#include <cekr/perm.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cekr {

enum class OracleMode { trivial_allowed, nontrivial_only };

// "trivial-allowed" / "nontrivial-only"; used in JSON and error text.
std::string oracle_mode_name(OracleMode mode);

struct OracleOptions {
  // Hard cap for the permutation-graph search.  5 is guaranteed fast; 6 is
  // allowed only when explicitly requested (720 vertices).
  int clique_bound = 5;
  // Hard cap for the generator search; ground sets beyond 6 are out of reach
  // (the antichain count explodes), so this is a refusal, not a tunable.
  int structured_bound = 6;
  // Search-node budget; exceeding it raises a resource-guard error rather
  // than returning a partial answer.
  std::uint64_t node_budget = 400'000'000;
};

struct OracleResult {
  int n = 0;
  int t = 0;
  OracleMode mode = OracleMode::trivial_allowed;
  BigCount maximum;
  // One maximizer: the lexicographically least one under the canonical
  // permutation order.  Empty when maximum == 0.
  PermFamily witness;
  bool exhaustive = false;     // always true on a returned result
  std::uint64_t node_count = 0;
};

// Exact maximum size of a family of permutations of [1..n] in which every
// pair shares at least t cycles (nontrivial-only mode additionally requires
// fewer than t cycles common to the whole family), by branch-and-bound
// search over S_n.
OracleResult max_clique_exact(int n, int t, OracleMode mode, const OracleOptions& opts = {});

// Same maximum, searched over generator families instead: maximizes the
// number of permutations whose fixed-point set contains a generator, over
// all antichains of subsets of [1..n] that pairwise (self included) meet in
// at least t points.  Ground truth only for families of that shape — the
// two oracles provably differ in nontrivial-only mode when n <= t+2, where
// the maximum is a single long-cycle permutation no generator family can
// express.
OracleResult structured_max(int n, int t, OracleMode mode, const OracleOptions& opts = {});

// Every maximum-size family, each exactly once, in canonical order.  Empty
// when the maximum is zero.
std::vector<PermFamily> enumerate_maximizers(int n, int t, OracleMode mode,
                                             const OracleOptions& opts = {});

}  // namespace cekr

#pragma once

#include <cekr/bigint.hpp>

#include <cstdint>

namespace cekr {

// Maximum size of a nontrivial intersecting family of k-subsets of [n]
// (every pair meets, no common element): C(n-1,k-1) - C(n-k-1,k-1) + 1.
// Only defined for k >= 2 and n > 2k: at k = 1 no nontrivial family exists,
// and at n <= 2k intersecting families are unconstrained.
BigCount hilton_milner(int n, int k);

// |{ V in C([n],k) : |[t+2] ∩ V| >= t+1 }|.
// The enumerated count is canonical; the binomial sum is an optimization that
// must agree with it wherever both are evaluated.
BigCount frankl_nu1(int n, int k, int t);
BigCount frankl_nu1_enumerated(int n, int k, int t);
BigCount frankl_nu1_formula(int n, int k, int t);

// |{ V in C([n],k) : [t] ⊆ V, V ∩ [t+1,k+1] != ∅ } ∪ { [k+1]\{i} : i in [t] }|.
BigCount frankl_nu2(int n, int k, int t);
BigCount frankl_nu2_enumerated(int n, int k, int t);
BigCount frankl_nu2_formula(int n, int k, int t);

// Maximum size of a t-intersecting family of k-subsets of [n]: the best
// frontier family max_r |{ V : |V ∩ [t+2r]| >= t+r }|, evaluated exactly for
// every feasible r.
BigCount ak_m(int n, int k, int t);

// Exhaustive branch-and-bound maximum over t-intersecting k-subset families,
// optionally restricted to nontrivial families (all members share fewer than
// t common elements). Ground truth for the closed forms above at small n.
struct KsetSearchResult {
  int maximum = 0;
  std::uint64_t nodes = 0;
};
KsetSearchResult max_intersecting_ksets(int n, int k, int t, bool nontrivial_only,
                                        std::uint64_t node_budget);

}  // namespace cekr

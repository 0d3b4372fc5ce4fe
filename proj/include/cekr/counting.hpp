#pragma once

#include <cekr/bigint.hpp>
#include <cekr/subset.hpp>

#include <string>
#include <utility>
#include <vector>

namespace cekr {

// Exact m!.  Thread-safe memoized table.
BigCount factorial(int m);

// Binomial coefficient with the counting convention: 0 whenever
// k < 0, n < 0 or k > n.
BigCount binom(int n, int k);

// Number of fixed-point-free permutations of an m-set.  d(0) = 1, d(1) = 0.
// A negative argument is a hard error, never silently 0.
BigCount derangements(int m);

// Sum of derangements(n - |S|) over all S in the upset (within [1..n]) of the
// generator family g: the number of permutations of [1..n] whose fixed-point
// set contains some generator.
BigCount perms_from_generators(const SetFamily& g, int n);

// Exact ratio of the two derangement-weighted sums attached to level ell
// (ell = t + 2r).  Domain: t <= ell <= n, ell = t (mod 2); the denominator
// sum must be positive (it degenerates to d(1) = 0 exactly when ell = n = t+2).
ExactRatio gamma_ratio(int ell, int n, int t);

// The frontier feasibility test at level ell:
//   (ell - t) / (2 (ell - 1)) * gamma_ratio(ell) <= 1,
// evaluated cross-multiplied so the degenerate denominators never divide.
// Always true at ell = t.
bool frontier_feasible(int n, int t, int ell);

// Largest ell = t + 2r <= n passing frontier_feasible; at least t.
int ell_star(int n, int t);

// Size of the level-r frontier family: permutations fixing at least t+r
// elements of [t+2r], summed by exact fixed-point pattern.
BigCount m_frontier(int n, int t, int r);

// Maximum frontier value over feasible levels, with the smallest maximizing r.
std::pair<BigCount, int> m_max(int n, int t);

// Permutations of [1..n] whose fixed-point set contains a member of the
// two-block generator family h_family(t, i).  Domain: 2 <= i <= n - t.
BigCount nu(int n, int t, int i);

// Closed form for nu, derived by inclusion-exclusion (see counting.cpp);
// validated against nu() on a grid before first use in this process.
BigCount s_closed(int n, int t, int i);

// Exact check of the lower bound
//   ratio >= 1 + (ell-t)/2 + (n-ell)(ell-t)/(ell-t+2)
// for the ratio of the two (n-ell)-indexed derangement sums.  Domain:
// t <= ell <= n-1 with matching parity and n > t; the bound is simply false
// at ell = n (both sums collapse to a single term), so that boundary is
// outside the contract.
bool ratio_lower_bound_check(int n, int t, int ell);

enum class Regime { frontier, nu };

struct ExtremalReport {
  int n = 0;
  int t = 0;
  int ell_star = 0;
  int r_star = 0;
  BigCount m_value;                              // maximum over all families
  Regime regime = Regime::nu;                    // which expression governs m_tilde
  std::vector<std::pair<int, BigCount>> nu_values;  // (i, value) candidates
  BigCount m_tilde;                              // maximum over nontrivial families
};

std::string regime_name(Regime r);

// Maximum size of a nontrivial t-cycle-intersecting family of permutations
// of [1..n], n >= t + 2, with all intermediate quantities reported.
ExtremalReport m_tilde(int n, int t);

}  // namespace cekr

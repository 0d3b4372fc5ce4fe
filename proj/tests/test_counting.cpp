#include <cekr/counting.hpp>

#include <cekr/error.hpp>
#include <cekr/subset.hpp>

#include <doctest.h>

#include <utility>

using namespace cekr;

TEST_CASE("factorial, binomial and derangement values") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binom(10, 3) == 120);
  CHECK(binom(5, 7) == 0);
  CHECK(binom(5, -1) == 0);

  // d(0)..d(8), the anchor table everything else leans on.
  const long long expected[] = {1, 0, 1, 2, 9, 44, 265, 1854, 14833};
  for (int m = 0; m <= 8; ++m) CHECK(derangements(m) == expected[m]);
  // Recurrence spot-check deeper in: d(m) = (m-1)(d(m-1) + d(m-2)).
  CHECK(derangements(20) == 19 * (derangements(19) + derangements(18)));
  CHECK_THROWS_AS(derangements(-1), error);
}

TEST_CASE("counting permutations whose fixed points cover a generator") {
  // Generator {1} on [4]: permutations fixing 1, i.e. 3! = 6.
  SetFamily g(4);
  g.insert(SubsetMask::of(4, {1}));
  CHECK(perms_from_generators(g, 4) == 6);

  // Two singleton generators {1}, {2}: |fix 1| + |fix 2| - |fix both| = 6+6-2.
  g.insert(SubsetMask::of(4, {2}));
  CHECK(perms_from_generators(g, 4) == 10);

  // The full set as only generator: exactly the identity.
  SetFamily full(4);
  full.insert(SubsetMask::full(4));
  CHECK(perms_from_generators(full, 4) == 1);
}

TEST_CASE("level ratio is exact: gamma(ell=4, n=8, t=2) = 25/4") {
  ExactRatio g = gamma_ratio(4, 8, 2);
  CHECK(ratio_num(g) == 25);
  CHECK(ratio_den(g) == 4);
  // ell = n = t + 2 degenerates (denominator sum is d(1) = 0).
  CHECK_THROWS_AS(gamma_ratio(4, 4, 2), error);
  CHECK_THROWS_AS(gamma_ratio(3, 8, 2), error);  // parity mismatch
}

TEST_CASE("feasible levels and the largest one") {
  // t = 1: every level is feasible up to n* - 1 region; frozen anchors.
  CHECK(ell_star(5, 1) == 1);
  CHECK(ell_star(6, 1) == 1);
  CHECK(ell_star(8, 4) == 8);
  CHECK(ell_star(7, 2) == 2);
  CHECK(frontier_feasible(8, 4, 4));  // ell = t is always feasible
  CHECK(frontier_feasible(8, 4, 8));
  CHECK_FALSE(frontier_feasible(6, 1, 3));
}

TEST_CASE("frontier maxima carry the smallest maximizing level") {
  auto [m5, r5] = m_max(5, 1);
  CHECK(m5 == 24);
  CHECK(r5 == 0);
  auto [m8, r8] = m_max(8, 4);
  CHECK(m8 == 29);
  CHECK(r8 == 2);
  // r = 2 means level t + 2r = 8 = ell_star(8, 4).
  CHECK(m_frontier(8, 4, 2) == 29);
  CHECK(m_frontier(5, 1, 0) == 24);
}

TEST_CASE("two-block family counts: frozen values and the closed form agree") {
  CHECK(nu(3, 1, 2) == 1);
  CHECK(nu(4, 2, 2) == 1);
  CHECK(nu(4, 1, 2) == 4);
  CHECK(nu(5, 1, 2) == 14);
  CHECK(nu(5, 1, 3) == 14);
  CHECK(nu(5, 2, 2) == 5);
  CHECK(nu(6, 1, 2) == 60);
  CHECK(nu(6, 1, 3) == 60);
  CHECK(nu(6, 1, 4) == 68);
  CHECK(nu(6, 1, 5) == 76);
  for (int n = 3; n <= 9; ++n)
    for (int t = 1; t <= 3; ++t)
      for (int i = 2; i <= n - t; ++i) CHECK(nu(n, t, i) == s_closed(n, t, i));
  CHECK_THROWS_AS(nu(6, 1, 6), error);  // i <= n - t
  CHECK_THROWS_AS(nu(6, 1, 1), error);  // i >= 2
}

TEST_CASE("ratio lower bound holds on the documented domain") {
  for (int t = 1; t <= 3; ++t)
    for (int n = t + 2; n <= 12; ++n)
      for (int ell = t; ell <= n - 1; ell += 2) CHECK(ratio_lower_bound_check(n, t, ell));
  CHECK_THROWS_AS(ratio_lower_bound_check(8, 1, 8), error);  // ell = n excluded
}

TEST_CASE("nontrivial maxima: values, regimes and candidate levels") {
  ExtremalReport r61 = m_tilde(6, 1);
  CHECK(r61.m_tilde == 68);
  CHECK(r61.regime == Regime::nu);
  CHECK(r61.ell_star == 1);
  // Candidates are the shallow and deep two-block families.
  REQUIRE(r61.nu_values.size() == 2);
  CHECK(r61.nu_values[0] == std::pair<int, BigCount>{2, 60});
  CHECK(r61.nu_values[1] == std::pair<int, BigCount>{4, 68});

  CHECK(m_tilde(3, 1).m_tilde == 0);
  CHECK(m_tilde(4, 1).m_tilde == 4);
  CHECK(m_tilde(4, 2).m_tilde == 1);
  CHECK(m_tilde(5, 1).m_tilde == 14);
  CHECK(m_tilde(5, 2).m_tilde == 5);
  CHECK(m_tilde(5, 3).m_tilde == 1);
  CHECK(m_tilde(7, 2).m_tilde == 78);

  // ell_star(7,2) = 2 puts (7,2) in the nu regime as well.
  ExtremalReport r72 = m_tilde(7, 2);
  CHECK(r72.regime == Regime::nu);
  CHECK(regime_name(r72.regime) == "nu");

  CHECK_THROWS_AS(m_tilde(3, 2), error);  // n >= t + 2 required
}

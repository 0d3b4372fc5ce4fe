#include <cekr/perm.hpp>

#include <cekr/error.hpp>

#include <doctest.h>

#include <vector>

using namespace cekr;

TEST_CASE("cycle form is canonical regardless of how the permutation is built") {
  // (2 3 1)(5 4) and (1 2 3)(4 5) are the same permutation.
  Permutation a = Permutation::from_cycles(5, {{2, 3, 1}, {5, 4}});
  Permutation b = Permutation::from_cycles(5, {{1, 2, 3}, {4, 5}});
  CHECK(a == b);
  CHECK(a.str() == "(1 2 3)(4 5)");
  CHECK(a.cycle_count() == 2);

  Permutation c = Permutation::from_one_line({2, 3, 1, 5, 4});
  CHECK(c == a);
  CHECK(c.one_line() == std::vector<int>{2, 3, 1, 5, 4});
}

TEST_CASE("singleton cycles are kept and counted") {
  Permutation p = Permutation::parse("(1 2)(3)(4)");
  CHECK(p.n() == 4);
  CHECK(p.cycle_count() == 3);
  CHECK(p.fixed_points().elements() == std::vector<int>{3, 4});
  CHECK(p.apply(1) == 2);
  CHECK(p.apply(3) == 3);
  CHECK_FALSE(p.is_identity());
  CHECK(Permutation::identity(4).is_identity());
}

TEST_CASE("parse and str round-trip through the canonical text form") {
  for (const char* text : {"(1)(2)(3)", "(1 3 2)", "(1 2)(3 4 5)", "(1 5)(2)(3 4)"}) {
    Permutation p = Permutation::parse(text);
    CHECK(Permutation::parse(p.str()) == p);
  }
  // Non-canonical spelling parses to the canonical form.
  CHECK(Permutation::parse("(3 1 2)") == Permutation::parse("(1 2 3)"));
}

TEST_CASE("malformed input is rejected with the right error kind") {
  auto kind_of = [](const char* text) {
    try {
      Permutation::parse(text);
    } catch (const error& e) {
      return e.kind();
    }
    return errc::invalid_argument;
  };
  CHECK(kind_of("(1 2)(2 3)") == errc::malformed_permutation);  // 2 twice
  CHECK(kind_of("(1 3)") == errc::malformed_permutation);       // 2 missing
  CHECK(kind_of("(0 1)") == errc::malformed_permutation);       // not 1-based
  CHECK(kind_of("") == errc::malformed_permutation);
  CHECK_THROWS_AS(Permutation::from_one_line({1, 1}), error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 2}}), error);  // 3 missing
}

TEST_CASE("common cycles count both shared long cycles and shared fixed points") {
  Permutation a = Permutation::parse("(1 2 3)(4)(5)");
  Permutation b = Permutation::parse("(1 2 3)(4 5)");
  CHECK(common_cycle_count(a, b) == 1);  // only (1 2 3)
  Permutation c = Permutation::parse("(1 3 2)(4)(5)");
  CHECK(common_cycle_count(a, c) == 2);  // (4) and (5); the 3-cycles differ
  CHECK(common_cycle_count(a, a) == 3);
  CHECK_THROWS_AS(common_cycle_count(a, Permutation::identity(4)), error);
}

TEST_CASE("a family is t-intersecting when every pair shares t cycles") {
  PermFamily star(3);  // all permutations fixing 1: common fixed point
  star.insert(Permutation::parse("(1)(2)(3)"));
  star.insert(Permutation::parse("(1)(2 3)"));
  CHECK(is_t_intersecting_family(star, 1));
  CHECK(family_common_cycles(star) == 1);
  CHECK_FALSE(is_nontrivial(star, 1));

  PermFamily mixed(3);
  mixed.insert(Permutation::parse("(1)(2)(3)"));
  mixed.insert(Permutation::parse("(1 2 3)"));
  CHECK_FALSE(is_t_intersecting_family(mixed, 1));

  // Intersecting with empty common intersection: nontrivial.  Each pair of
  // the non-identity members shares exactly one fixed point, and no cycle is
  // shared by all four.
  PermFamily nt(4);
  nt.insert(Permutation::parse("(1)(2)(3)(4)"));
  nt.insert(Permutation::parse("(1)(2)(3 4)"));
  nt.insert(Permutation::parse("(1)(2 4)(3)"));
  nt.insert(Permutation::parse("(1 4)(2)(3)"));
  CHECK(is_t_intersecting_family(nt, 1));
  CHECK(family_common_cycles(nt) == 0);
  CHECK(is_nontrivial(nt, 1));
  CHECK_FALSE(is_nontrivial(nt, 2));  // pairs share only 1 cycle

  CHECK_THROWS_AS(family_common_cycles(PermFamily(3)), error);
}

TEST_CASE("enumerate_sn yields n! permutations in strictly increasing order") {
  std::vector<Permutation> s4 = enumerate_sn(4);
  CHECK(s4.size() == 24);
  for (std::size_t i = 1; i < s4.size(); ++i) CHECK(s4[i - 1] < s4[i]);
  CHECK(s4.front().is_identity());
  CHECK_THROWS_AS(enumerate_sn(9), error);  // default guard is 8
}

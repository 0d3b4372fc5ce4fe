#pragma once

#include <cekr/subset.hpp>

#include <set>
#include <string>
#include <vector>

namespace cekr {

// Permutation of [1..n] in canonical cycle form: every cycle is rotated so
// its smallest element comes first, cycles are sorted by first element, and
// singletons are kept (they matter for intersection counting).
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(int n);
  // image[k] is the image of k+1; must be a bijection on [1..n].
  static Permutation from_one_line(const std::vector<int>& image);
  // cycles must partition [1..n]; they are canonicalized here.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& cycles() const { return cycles_; }
  int cycle_count() const { return static_cast<int>(cycles_.size()); }

  std::vector<int> one_line() const;
  int apply(int x) const;
  SubsetMask fixed_points() const;
  bool is_identity() const;

  // Text form "(1 2 3)(4)".
  std::string str() const;
  static Permutation parse(const std::string& text);

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.cycles_ == b.cycles_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  // Canonical order: by ground set size, then by cycle lists; used wherever a
  // deterministic order over permutations is promised.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.cycles_ < b.cycles_;
  }

private:
  int n_ = 0;
  std::vector<std::vector<int>> cycles_;
};

// Number of cycles (canonical sequences, singletons included) present in both.
int common_cycle_count(const Permutation& a, const Permutation& b);

// Set of permutations over a fixed ground set, iterated in canonical order.
class PermFamily {
public:
  PermFamily() = default;
  explicit PermFamily(int n);

  int n() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  void insert(const Permutation& p);
  bool contains(const Permutation& p) const;

  const std::set<Permutation>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const PermFamily& a, const PermFamily& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }
  friend bool operator<(const PermFamily& a, const PermFamily& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.members_ < b.members_;
  }

private:
  int n_ = 0;
  std::set<Permutation> members_;
};

// Every pair of distinct members shares at least t cycles.
bool is_t_intersecting_family(const PermFamily& a, int t);

// Number of cycles shared by every member (undefined on an empty family).
int family_common_cycles(const PermFamily& a);

// t-intersecting and fewer than t cycles common to the whole family.
bool is_nontrivial(const PermFamily& a, int t);

// All of S_n in canonical order.  Guarded: n! grows fast.
std::vector<Permutation> enumerate_sn(int n, int bound = 8);

}  // namespace cekr

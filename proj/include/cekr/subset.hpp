#pragma once

#include <cekr/error.hpp>

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace cekr {

// Subset of the ground set [1..n], n <= 64, stored as a bit mask
// (element e corresponds to bit e-1).
class SubsetMask {
public:
  SubsetMask() : n_(0), bits_(0) {}
  explicit SubsetMask(int n, std::uint64_t bits = 0);
  static SubsetMask of(int n, const std::vector<int>& elements);
  static SubsetMask full(int n);

  int n() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool contains(int e) const;
  SubsetMask with(int e) const;
  SubsetMask without(int e) const;

  bool subset_of(const SubsetMask& other) const;
  int intersection_size(const SubsetMask& other) const;
  SubsetMask intersect(const SubsetMask& other) const;
  SubsetMask unite(const SubsetMask& other) const;

  // Same bits over a larger ground set.
  SubsetMask widened(int m) const;

  std::vector<int> elements() const;

  // Space-separated 1-based elements, e.g. "1 3 4"; empty set renders as "".
  std::string str() const;
  static SubsetMask parse(const std::string& text, int n);

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const SubsetMask& a, const SubsetMask& b) { return !(a == b); }
  friend bool operator<(const SubsetMask& a, const SubsetMask& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.bits_ < b.bits_;
  }

private:
  int n_;
  std::uint64_t bits_;
};

// Finite family of subsets of [1..n]; members kept sorted and unique, so
// iteration order is deterministic.
class SetFamily {
public:
  SetFamily() : n_(0) {}
  explicit SetFamily(int n);

  int n() const { return n_; }
  std::size_t size() const { return masks_.size(); }
  bool empty() const { return masks_.empty(); }

  void insert(const SubsetMask& s);
  void insert_bits(std::uint64_t bits);
  bool contains(const SubsetMask& s) const;
  bool contains_bits(std::uint64_t bits) const;

  const std::vector<std::uint64_t>& masks() const { return masks_; }
  std::vector<SubsetMask> members() const;

  SetFamily widened(int m) const;

  // One member per line in SubsetMask text form.
  std::string str() const;
  static SetFamily parse(const std::string& text, int n);

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.n_ == b.n_ && a.masks_ == b.masks_;
  }

private:
  int n_;
  std::vector<std::uint64_t> masks_;
};

// All supersets (within [1..n]) of the members of g.  Enumerates 2^n masks,
// so the ground set is capped; use perms_from_generators for weighted sums
// over large n.
SetFamily upset(const SetFamily& g);

// The inclusion-minimal members of f.
SetFamily minimal_elements(const SetFamily& f);

// Intersection of all members (undefined on an empty family).
SubsetMask common_intersection(const SetFamily& f);

// Every pair of distinct members meets in at least t elements.
bool is_t_intersecting_setfamily(const SetFamily& f, int t);

// The two-block generator family on ground set [t+i]: all (t+1)-subsets
// containing [t], plus all (t+i-1)-subsets containing [t+1..t+i].
SetFamily h_family(int t, int i);

// Repeated (v,w)-exchange, v < w: replace w by v in a member whenever the
// result is not already present, sweeping until no exchange applies.
// Preserves family size.
SetFamily left_compress_setfamily(const SetFamily& f);

}  // namespace cekr

#include <cekr/perm.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cekr {

namespace {

std::vector<std::vector<int>> canonical_cycles_from_image(const std::vector<int>& image) {
  int n = static_cast<int>(image.size());
  std::vector<char> seen(n + 1, 0);
  std::vector<std::vector<int>> cycles;
  // Starting each cycle at its smallest unvisited element yields min-first
  // rotation and ascending-first-element order in one sweep.
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    int x = start;
    do {
      seen[x] = 1;
      cyc.push_back(x);
      x = image[x - 1];
    } while (x != start);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

}  // namespace

Permutation Permutation::identity(int n) {
  require(n >= 0, errc::invalid_argument, "ground set size must be non-negative");
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  return from_one_line(image);
}

Permutation Permutation::from_one_line(const std::vector<int>& image) {
  int n = static_cast<int>(image.size());
  std::vector<char> hit(n + 1, 0);
  for (int v : image) {
    if (v < 1 || v > n || hit[v])
      fail(errc::malformed_permutation, "one-line form is not a bijection on [1..n]");
    hit[v] = 1;
  }
  Permutation p;
  p.n_ = n;
  p.cycles_ = canonical_cycles_from_image(image);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  require(n >= 0, errc::invalid_argument, "ground set size must be non-negative");
  std::vector<int> image(n, 0);
  std::vector<char> seen(n + 1, 0);
  for (const auto& cyc : cycles) {
    if (cyc.empty()) fail(errc::malformed_permutation, "empty cycle");
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int x = cyc[k];
      if (x < 1 || x > n) fail(errc::malformed_permutation, "cycle element outside [1..n]");
      if (seen[x]) fail(errc::malformed_permutation, "element appears twice across cycles");
      seen[x] = 1;
      image[x - 1] = cyc[(k + 1) % cyc.size()];
    }
  }
  for (int x = 1; x <= n; ++x)
    if (!seen[x]) fail(errc::malformed_permutation, "cycles do not cover [1..n]");
  return from_one_line(image);
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> image(n_, 0);
  for (const auto& cyc : cycles_)
    for (std::size_t k = 0; k < cyc.size(); ++k) image[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
  return image;
}

int Permutation::apply(int x) const {
  require(x >= 1 && x <= n_, errc::out_of_range, "point outside the ground set");
  for (const auto& cyc : cycles_)
    for (std::size_t k = 0; k < cyc.size(); ++k)
      if (cyc[k] == x) return cyc[(k + 1) % cyc.size()];
  fail(errc::malformed_permutation, "point not covered by any cycle");
}

SubsetMask Permutation::fixed_points() const {
  SubsetMask s(n_);
  for (const auto& cyc : cycles_)
    if (cyc.size() == 1) s = s.with(cyc[0]);
  return s;
}

bool Permutation::is_identity() const { return cycle_count() == n_; }

std::string Permutation::str() const {
  std::ostringstream os;
  for (const auto& cyc : cycles_) {
    os << '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) os << ' ';
      os << cyc[k];
    }
    os << ')';
  }
  return os.str();
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      fail(errc::malformed_permutation, "expected '(' in permutation text");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      int v = 0;
      bool any = false;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + (text[pos] - '0');
        ++pos;
        any = true;
      }
      if (!any) fail(errc::malformed_permutation, "expected a number in cycle");
      cyc.push_back(v);
      skip_ws();
    }
    if (pos >= text.size()) fail(errc::malformed_permutation, "unterminated cycle");
    ++pos;  // ')'
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  if (cycles.empty()) fail(errc::malformed_permutation, "empty permutation text");
  int n = 0;
  for (const auto& cyc : cycles)
    for (int v : cyc) n = std::max(n, v);
  return from_cycles(n, cycles);
}

int common_cycle_count(const Permutation& a, const Permutation& b) {
  require(a.n() == b.n(), errc::domain_mismatch, "permutations act on different ground sets");
  // Both cycle lists are sorted by first (= smallest) element.
  const auto& ca = a.cycles();
  const auto& cb = b.cycles();
  std::size_t i = 0, j = 0;
  int count = 0;
  while (i < ca.size() && j < cb.size()) {
    if (ca[i] == cb[j]) {
      ++count;
      ++i;
      ++j;
    } else if (ca[i] < cb[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

PermFamily::PermFamily(int n) : n_(n) {
  require(n >= 0, errc::invalid_argument, "ground set size must be non-negative");
}

void PermFamily::insert(const Permutation& p) {
  require(p.n() == n_, errc::domain_mismatch, "member acts on a different ground set");
  members_.insert(p);
}

bool PermFamily::contains(const Permutation& p) const {
  require(p.n() == n_, errc::domain_mismatch, "member acts on a different ground set");
  return members_.count(p) > 0;
}

bool is_t_intersecting_family(const PermFamily& a, int t) {
  require(t >= 0, errc::out_of_range, "t must be non-negative");
  for (auto i = a.begin(); i != a.end(); ++i) {
    for (auto j = std::next(i); j != a.end(); ++j)
      if (common_cycle_count(*i, *j) < t) return false;
  }
  return true;
}

int family_common_cycles(const PermFamily& a) {
  require(!a.empty(), errc::undefined_on_empty, "common cycles of an empty family");
  auto it = a.begin();
  std::vector<std::vector<int>> common = it->cycles();
  for (++it; it != a.end(); ++it) {
    const auto& cyc = it->cycles();
    std::vector<std::vector<int>> next;
    std::set_intersection(common.begin(), common.end(), cyc.begin(), cyc.end(),
                          std::back_inserter(next));
    common.swap(next);
    if (common.empty()) break;
  }
  return static_cast<int>(common.size());
}

bool is_nontrivial(const PermFamily& a, int t) {
  require(t >= 1, errc::out_of_range, "t must be at least 1");
  return is_t_intersecting_family(a, t) && family_common_cycles(a) < t;
}

std::vector<Permutation> enumerate_sn(int n, int bound) {
  require(n >= 1, errc::out_of_range, "ground set must have at least one element");
  require(n <= bound, errc::resource_guard,
          "refusing to enumerate S_n beyond the configured bound");
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(image));
  } while (std::next_permutation(image.begin(), image.end()));
  // One-line lexicographic order is not the canonical (cycle-list) order;
  // downstream "lexicographically least" promises are stated in the latter.
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cekr

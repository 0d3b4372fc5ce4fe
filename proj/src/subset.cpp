#include <cekr/subset.hpp>

#include <algorithm>
#include <sstream>

namespace cekr {

SubsetMask::SubsetMask(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  require(n >= 0, errc::invalid_argument, "ground set size must be non-negative");
  require(n <= 64, errc::resource_guard, "ground sets beyond 64 elements are not supported");
  if (n < 64) {
    require((bits >> n) == 0, errc::out_of_range, "subset contains elements beyond the ground set");
  }
}

SubsetMask SubsetMask::of(int n, const std::vector<int>& elements) {
  SubsetMask s(n);
  for (int e : elements) s = s.with(e);
  return s;
}

SubsetMask SubsetMask::full(int n) {
  SubsetMask s(n);
  s.bits_ = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
  return s;
}

bool SubsetMask::contains(int e) const {
  require(e >= 1 && e <= n_, errc::out_of_range, "element outside the ground set");
  return (bits_ >> (e - 1)) & 1;
}

SubsetMask SubsetMask::with(int e) const {
  require(e >= 1 && e <= n_, errc::out_of_range, "element outside the ground set");
  SubsetMask s = *this;
  s.bits_ |= 1ULL << (e - 1);
  return s;
}

SubsetMask SubsetMask::without(int e) const {
  require(e >= 1 && e <= n_, errc::out_of_range, "element outside the ground set");
  SubsetMask s = *this;
  s.bits_ &= ~(1ULL << (e - 1));
  return s;
}

bool SubsetMask::subset_of(const SubsetMask& other) const {
  require(n_ == other.n_, errc::domain_mismatch, "subsets live on different ground sets");
  return (bits_ & ~other.bits_) == 0;
}

int SubsetMask::intersection_size(const SubsetMask& other) const {
  require(n_ == other.n_, errc::domain_mismatch, "subsets live on different ground sets");
  return std::popcount(bits_ & other.bits_);
}

SubsetMask SubsetMask::intersect(const SubsetMask& other) const {
  require(n_ == other.n_, errc::domain_mismatch, "subsets live on different ground sets");
  return SubsetMask(n_, bits_ & other.bits_);
}

SubsetMask SubsetMask::unite(const SubsetMask& other) const {
  require(n_ == other.n_, errc::domain_mismatch, "subsets live on different ground sets");
  return SubsetMask(n_, bits_ | other.bits_);
}

SubsetMask SubsetMask::widened(int m) const {
  require(m >= n_, errc::invalid_argument, "cannot widen to a smaller ground set");
  return SubsetMask(m, bits_);
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  for (int e = 1; e <= n_; ++e)
    if ((bits_ >> (e - 1)) & 1) out.push_back(e);
  return out;
}

std::string SubsetMask::str() const {
  std::ostringstream os;
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ' ';
    os << e;
    first = false;
  }
  return os.str();
}

SubsetMask SubsetMask::parse(const std::string& text, int n) {
  SubsetMask s(n);
  std::istringstream is(text);
  std::string token;
  while (is >> token) {
    std::size_t pos = 0;
    int e = 0;
    try {
      e = std::stoi(token, &pos);
    } catch (const std::exception&) {
      fail(errc::invalid_argument, "subset element is not a number: '" + token + "'");
    }
    require(pos == token.size(), errc::invalid_argument,
            "subset element is not a number: '" + token + "'");
    s = s.with(e);
  }
  return s;
}

SetFamily::SetFamily(int n) : n_(n) {
  require(n >= 0, errc::invalid_argument, "ground set size must be non-negative");
  require(n <= 64, errc::resource_guard, "ground sets beyond 64 elements are not supported");
}

void SetFamily::insert(const SubsetMask& s) {
  require(s.n() == n_, errc::domain_mismatch, "member lives on a different ground set");
  insert_bits(s.bits());
}

void SetFamily::insert_bits(std::uint64_t bits) {
  auto it = std::lower_bound(masks_.begin(), masks_.end(), bits);
  if (it == masks_.end() || *it != bits) masks_.insert(it, bits);
}

bool SetFamily::contains(const SubsetMask& s) const {
  require(s.n() == n_, errc::domain_mismatch, "member lives on a different ground set");
  return contains_bits(s.bits());
}

bool SetFamily::contains_bits(std::uint64_t bits) const {
  return std::binary_search(masks_.begin(), masks_.end(), bits);
}

std::vector<SubsetMask> SetFamily::members() const {
  std::vector<SubsetMask> out;
  out.reserve(masks_.size());
  for (std::uint64_t bits : masks_) out.emplace_back(n_, bits);
  return out;
}

SetFamily SetFamily::widened(int m) const {
  require(m >= n_, errc::invalid_argument, "cannot widen to a smaller ground set");
  SetFamily f(m);
  f.masks_ = masks_;
  return f;
}

std::string SetFamily::str() const {
  std::ostringstream os;
  for (std::uint64_t bits : masks_) os << SubsetMask(n_, bits).str() << '\n';
  return os.str();
}

SetFamily SetFamily::parse(const std::string& text, int n) {
  SetFamily f(n);
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    f.insert(SubsetMask::parse(line, n));
  }
  return f;
}

SetFamily upset(const SetFamily& g) {
  int n = g.n();
  require(n <= 22, errc::resource_guard,
          "explicit upset enumeration is capped at 22 ground elements");
  std::uint64_t total = 1ULL << n;
  std::vector<char> in(total, 0);
  for (std::uint64_t m : g.masks()) in[m] = 1;
  // mask is in the upset iff it is a generator or dropping some element
  // leaves a member; ascending mask order sees subsets first.
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    if (in[mask]) continue;
    std::uint64_t rest = mask;
    while (rest) {
      std::uint64_t low = rest & (~rest + 1);
      if (in[mask ^ low]) {
        in[mask] = 1;
        break;
      }
      rest ^= low;
    }
  }
  SetFamily out(n);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (in[mask]) out.insert_bits(mask);
  return out;
}

SetFamily minimal_elements(const SetFamily& f) {
  SetFamily out(f.n());
  const auto& masks = f.masks();
  for (std::uint64_t m : masks) {
    bool minimal = true;
    for (std::uint64_t other : masks) {
      if (other != m && (other & ~m) == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert_bits(m);
  }
  return out;
}

SubsetMask common_intersection(const SetFamily& f) {
  require(!f.empty(), errc::undefined_on_empty, "common intersection of an empty family");
  std::uint64_t acc = ~0ULL;
  for (std::uint64_t m : f.masks()) acc &= m;
  return SubsetMask(f.n(), acc & SubsetMask::full(f.n()).bits());
}

bool is_t_intersecting_setfamily(const SetFamily& f, int t) {
  require(t >= 0, errc::out_of_range, "t must be non-negative");
  const auto& masks = f.masks();
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (std::popcount(masks[i] & masks[j]) < t) return false;
  return true;
}

SetFamily h_family(int t, int i) {
  require(t >= 1, errc::out_of_range, "t must be at least 1");
  require(i >= 1, errc::out_of_range, "block index must be at least 1");
  int ground = t + i;
  require(ground <= 62, errc::resource_guard, "h_family ground set too large");
  SetFamily out(ground);
  std::uint64_t base = (1ULL << t) - 1;  // [t]
  // (t+1)-subsets of [t+i] containing [t]: add one element of [t+1..t+i].
  for (int e = t + 1; e <= t + i; ++e) out.insert_bits(base | (1ULL << (e - 1)));
  // (t+i-1)-subsets of [t+i] containing [t+1..t+i]: drop one element of [t].
  std::uint64_t all = (1ULL << ground) - 1;
  for (int e = 1; e <= t; ++e) out.insert_bits(all ^ (1ULL << (e - 1)));
  return out;
}

SetFamily left_compress_setfamily(const SetFamily& f) {
  int n = f.n();
  SetFamily cur = f;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 1; v <= n; ++v) {
      for (int w = v + 1; w <= n; ++w) {
        std::uint64_t vb = 1ULL << (v - 1), wb = 1ULL << (w - 1);
        // One simultaneous pass: each member moves unless its image already
        // belongs to the family as it was before this pass.
        SetFamily next(n);
        bool moved = false;
        for (std::uint64_t m : cur.masks()) {
          if ((m & wb) && !(m & vb)) {
            std::uint64_t img = (m ^ wb) | vb;
            if (!cur.contains_bits(img)) {
              next.insert_bits(img);
              moved = true;
              continue;
            }
          }
          next.insert_bits(m);
        }
        if (moved) {
          cur = next;
          changed = true;
        }
      }
    }
  }
  return cur;
}

}  // namespace cekr

#include <cekr/counting.hpp>

#include <cekr/error.hpp>

#include <algorithm>
#include <map>
#include <mutex>

namespace cekr {

namespace {

std::mutex table_mutex;

const BigCount& factorial_locked(int m) {
  static std::vector<BigCount> table{1};
  while (static_cast<int>(table.size()) <= m) table.push_back(table.back() * table.size());
  return table[m];
}

const BigCount& derangements_locked(int m) {
  // d(m) = m * d(m-1) + (-1)^m.
  static std::vector<BigCount> table{1, 0};
  while (static_cast<int>(table.size()) <= m) {
    int k = static_cast<int>(table.size());
    table.push_back(BigCount(k) * table.back() + (k % 2 == 0 ? 1 : -1));
  }
  return table[m];
}

}  // namespace

BigCount factorial(int m) {
  require(m >= 0, errc::out_of_range, "factorial of a negative number");
  std::lock_guard<std::mutex> lock(table_mutex);
  return factorial_locked(m);
}

BigCount binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::lock_guard<std::mutex> lock(table_mutex);
  BigCount num = factorial_locked(n);
  return num / (factorial_locked(k) * factorial_locked(n - k));
}

BigCount derangements(int m) {
  require(m >= 0, errc::out_of_range, "derangement count of a negative number");
  std::lock_guard<std::mutex> lock(table_mutex);
  return derangements_locked(m);
}

namespace {

// Count of upset members of each size over the generators' own ground set.
// Cached: the crossover and monotonicity sweeps hit the same generator
// families for many n.
std::vector<std::uint64_t> upset_size_profile(const std::vector<std::uint64_t>& gens, int ground) {
  static std::map<std::pair<int, std::vector<std::uint64_t>>, std::vector<std::uint64_t>> cache;
  static std::mutex cache_mutex;
  auto key = std::make_pair(ground, gens);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::uint64_t total = 1ULL << ground;
  std::vector<char> in(total, 0);
  for (std::uint64_t g : gens) in[g] = 1;
  std::vector<std::uint64_t> profile(ground + 1, 0);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!in[mask]) {
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
    if (in[mask]) ++profile[std::popcount(mask)];
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(std::move(key), std::move(profile)).first->second;
}

}  // namespace

BigCount perms_from_generators(const SetFamily& g, int n) {
  require(n >= 0, errc::out_of_range, "ground set size must be non-negative");
  require(g.n() <= n, errc::domain_mismatch, "generators live beyond [1..n]");
  if (g.empty()) return 0;
  // Members of the upset split as A ∪ B with A over the generators' support
  // and B free among the remaining elements, so the weighted sum needs the
  // upset explicitly only over the support.
  int ground = 0;
  for (std::uint64_t m : g.masks())
    ground = std::max(ground, m ? 64 - std::countl_zero(m) : 0);
  require(ground <= 22, errc::resource_guard,
          "generator support too large for upset enumeration");
  auto profile = upset_size_profile(g.masks(), ground);
  int free_elems = n - ground;
  BigCount total = 0;
  for (int a = 0; a <= ground; ++a) {
    if (profile[a] == 0) continue;
    BigCount inner = 0;
    for (int b = 0; b <= free_elems; ++b) inner += binom(free_elems, b) * derangements(n - a - b);
    total += BigCount(profile[a]) * inner;
  }
  return total;
}

namespace {

void check_level_domain(int ell, int n, int t) {
  require(t >= 1, errc::out_of_range, "t must be at least 1");
  require(ell >= t && ell <= n, errc::out_of_range, "level must satisfy t <= ell <= n");
  require((ell - t) % 2 == 0, errc::out_of_range, "level must have the same parity as t");
}

// Numerator sum: i = 0 .. n-ell+1 of d(n - (ell+t)/2 + 1 - i) * C(n-ell+1, i).
BigCount gamma_numerator(int ell, int n, int t) {
  int half = (ell + t) / 2;
  BigCount sum = 0;
  for (int i = 0; i <= n - ell + 1; ++i) sum += derangements(n - half + 1 - i) * binom(n - ell + 1, i);
  return sum;
}

// Denominator sum: i = 0 .. n-ell of d(n - (ell+t)/2 - i) * C(n-ell, i).
BigCount gamma_denominator(int ell, int n, int t) {
  int half = (ell + t) / 2;
  BigCount sum = 0;
  for (int i = 0; i <= n - ell; ++i) sum += derangements(n - half - i) * binom(n - ell, i);
  return sum;
}

}  // namespace

ExactRatio gamma_ratio(int ell, int n, int t) {
  check_level_domain(ell, n, t);
  BigCount num = gamma_numerator(ell, n, t);
  BigCount den = gamma_denominator(ell, n, t);
  require(den > 0, errc::out_of_range,
          "degenerate level: the denominator sum vanishes (single d(1) term)");
  return ExactRatio(num, den);
}

bool frontier_feasible(int n, int t, int ell) {
  check_level_domain(ell, n, t);
  // (ell-t) * num <= 2 (ell-1) * den, never dividing: at ell = t the left
  // side is 0 (test passes regardless of gamma), and a vanished denominator
  // with ell > t fails the test, matching the limit gamma -> infinity.
  BigCount lhs = BigCount(ell - t) * gamma_numerator(ell, n, t);
  BigCount rhs = BigCount(2) * (ell - 1) * gamma_denominator(ell, n, t);
  return lhs <= rhs;
}

int ell_star(int n, int t) {
  require(t >= 1 && t <= n, errc::out_of_range, "need 1 <= t <= n");
  int best = t;
  for (int ell = t + 2; ell <= n; ell += 2)
    if (frontier_feasible(n, t, ell)) best = ell;
  return best;
}

BigCount m_frontier(int n, int t, int r) {
  require(t >= 1, errc::out_of_range, "t must be at least 1");
  require(r >= 0, errc::out_of_range, "frontier radius must be non-negative");
  require(t + 2 * r <= n, errc::out_of_range, "frontier [t+2r] exceeds the ground set");
  int ell = t + 2 * r;
  BigCount total = 0;
  for (int i = t + r; i <= ell; ++i) {
    BigCount inner = 0;
    for (int j = 0; j <= n - ell; ++j) inner += binom(n - ell, j) * derangements(n - i - j);
    total += binom(ell, i) * inner;
  }
  return total;
}

std::pair<BigCount, int> m_max(int n, int t) {
  require(t >= 1 && t <= n, errc::out_of_range, "need 1 <= t <= n");
  BigCount best = -1;
  int best_r = 0;
  for (int r = 0; t + 2 * r <= n; ++r) {
    if (!frontier_feasible(n, t, t + 2 * r)) continue;
    BigCount value = m_frontier(n, t, r);
    if (value > best) {  // strict: ties keep the smallest r
      best = value;
      best_r = r;
    }
  }
  return {best, best_r};
}

BigCount nu(int n, int t, int i) {
  require(t >= 1, errc::out_of_range, "t must be at least 1");
  require(i >= 2 && i <= n - t, errc::out_of_range, "need 2 <= i <= n - t");
  return perms_from_generators(h_family(t, i).widened(n), n);
}

namespace {

// The generated family is the disjoint union of
//   (a) permutations fixing [t] pointwise with at least one further fixed
//       point in [t+1..t+i]: (n-t)! minus those with no fixed point there,
//       i.e. minus sum_j C(n-t-i, j) d(n-t-j), and
//   (b) for each of the t elements e of [t]: permutations fixing
//       [t+i] \ {e} pointwise with e itself displaced, which is
//       sum_j C(n-t-i, j) d(n-t-i+1-j) (choose the extra fixed points
//       outside [t+i], then derange the rest including e).
// Both blocks of the generator family are covered: (a) holds the supersets of
// the first block, (b) the supersets of second-block members not already in (a).
BigCount s_closed_raw(int n, int t, int i) {
  int m = n - t - i;
  BigCount none_extra = 0;
  for (int j = 0; j <= m; ++j) none_extra += binom(m, j) * derangements(n - t - j);
  BigCount displaced = 0;
  for (int j = 0; j <= m; ++j) displaced += binom(m, j) * derangements(m + 1 - j);
  return factorial(n - t) - none_extra + BigCount(t) * displaced;
}

std::once_flag s_closed_once;

// The closed form is only trusted after it reproduces the direct upset sum
// across a grid; runs once per process, before the first s_closed result is
// handed out.
void validate_s_closed() {
  for (int t = 1; t <= 3; ++t)
    for (int n = t + 2; n <= 9; ++n)
      for (int i = 2; i <= n - t; ++i)
        if (s_closed_raw(n, t, i) != nu(n, t, i))
          fail(errc::invalid_argument, "closed form disagrees with the direct upset sum");
}

}  // namespace

BigCount s_closed(int n, int t, int i) {
  require(t >= 1, errc::out_of_range, "t must be at least 1");
  require(i >= 2 && i <= n - t, errc::out_of_range, "need 2 <= i <= n - t");
  std::call_once(s_closed_once, validate_s_closed);
  return s_closed_raw(n, t, i);
}

bool ratio_lower_bound_check(int n, int t, int ell) {
  check_level_domain(ell, n, t);
  require(n > t, errc::out_of_range, "the bound needs at least one non-fixed element");
  require(ell <= n - 1, errc::out_of_range,
          "the bound does not apply at ell = n (the sums collapse to a single ratio)");
  int half = (ell + t) / 2;
  BigCount num = 0, den = 0;
  for (int j = 0; j <= n - ell; ++j) {
    num += binom(n - ell, j) * derangements(n - half + 1 - j);
    den += binom(n - ell, j) * derangements(n - half - j);
  }
  require(den > 0, errc::out_of_range, "degenerate level: denominator sum vanishes");
  // num/den >= 1 + (ell-t)/2 + (n-ell)(ell-t)/(ell-t+2), cross-multiplied by
  // 2 (ell-t+2) den > 0.
  BigCount lhs = BigCount(2) * (ell - t + 2) * num;
  BigCount rhs = (BigCount(2) * (ell - t + 2) + BigCount(ell - t) * (ell - t + 2) +
                  BigCount(2) * (n - ell) * (ell - t)) *
                 den;
  return lhs >= rhs;
}

std::string regime_name(Regime r) { return r == Regime::frontier ? "M" : "nu"; }

ExtremalReport m_tilde(int n, int t) {
  require(t >= 1, errc::out_of_range, "t must be at least 1");
  require(n >= t + 2, errc::out_of_range, "a nontrivial family needs n >= t + 2");
  ExtremalReport rep;
  rep.n = n;
  rep.t = t;
  rep.ell_star = ell_star(n, t);
  auto [m_value, r_star] = m_max(n, t);
  rep.m_value = m_value;
  rep.r_star = r_star;
  // Candidate nontrivial generator families sit at the ends of the valid
  // index range [2, n-t-1]; the interior is dominated by an endpoint because
  // the value sequence never decreases again once it has increased.
  std::vector<int> candidates;
  if (n - t - 1 >= 2) {
    candidates.push_back(2);
    if (n - t - 1 != 2) candidates.push_back(n - t - 1);
  }
  for (int i : candidates) rep.nu_values.emplace_back(i, nu(n, t, i));
  if (rep.ell_star > t) {
    rep.regime = Regime::frontier;
    rep.m_tilde = rep.m_value;
    return rep;
  }
  rep.regime = Regime::nu;
  if (!rep.nu_values.empty()) {
    BigCount best = 0;
    for (const auto& [i, v] : rep.nu_values) best = std::max(best, v);
    rep.m_tilde = best;
  } else {
    // n = t + 2: no multi-member family can be nontrivial (any pair shares
    // its pairwise-common >= t cycles family-wide), so the maximum comes from
    // single permutations with fewer than t cycles; those exist iff t >= 2.
    rep.m_tilde = (t >= 2) ? 1 : 0;
  }
  return rep;
}

}  // namespace cekr

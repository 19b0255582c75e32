#include "weylcert/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "weylcert/errors.hpp"

namespace weylcert::oracle {

namespace {

using Q = boost::multiprecision::cpp_rational;

// Phase one of the simplex method on A t = b, t >= 0, with Bland's rule.
// Returns whether the system is feasible.
bool feasible(std::vector<std::vector<Q>> a, std::vector<Q> b) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
    }
  }
  // columns 0..n-1 original, n..n+m-1 artificial; basis starts artificial
  const std::size_t cols = n + m;
  std::vector<std::vector<Q>> t(m, std::vector<Q>(cols + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][cols] = b[i];
  }
  std::vector<std::size_t> basis(m);
  std::iota(basis.begin(), basis.end(), n);

  while (true) {
    // reduced cost of column j for objective sum of artificials: -(sum of rows with artificial basis)
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols && enter == cols; ++j) {
      if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
      Q reduced = j >= n ? Q(1) : Q(0);
      for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) reduced -= t[i][j];
      if (reduced < 0) enter = j;
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Q best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Q ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded cannot happen for phase one; defensive
    const Q pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Q f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n && t[i][cols] != 0) return false;
  return true;
}

}  // namespace

bool hull_membership_exact(std::span<const Weight> points, const Weight& mu) {
  if (points.size() > kMaxHullPoints) throw OracleScaleError("hull oracle limited to 10000 points");
  if (mu.rank() > kMaxHullRank) throw OracleScaleError("hull oracle limited to rank 6");
  if (points.empty()) return false;
  const int r = mu.rank();
  for (const auto& p : points) {
    if (p.rank() != r) throw ArgumentError("hull oracle: rank mismatch");
    if (p == mu) return true;
  }
  for (int i = 0; i < r; ++i) {
    std::int64_t lo = points[0][i], hi = points[0][i];
    for (const auto& p : points) {
      lo = std::min(lo, p[i]);
      hi = std::max(hi, p[i]);
    }
    if (mu[i] < lo || mu[i] > hi) return false;
  }
  std::vector<std::vector<Q>> a(r + 1, std::vector<Q>(points.size()));
  std::vector<Q> b(r + 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (int i = 0; i < r; ++i) a[i][j] = points[j][i];
    a[r][j] = 1;
  }
  for (int i = 0; i < r; ++i) b[i] = mu[i];
  b[r] = 1;
  return feasible(std::move(a), std::move(b));
}

std::vector<Weight> orbit_naive(const RootSystem& rs, const Weight& lambda) {
  const int r = rs.rank();
  if (r > kMaxOrbitRank) throw OracleScaleError("naive orbit limited to rank 6");
  if (lambda.rank() != r) throw ArgumentError("naive orbit: rank mismatch");
  std::set<Weight> out;
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned signs = 0; signs < (1u << r); ++signs) {
      if (rs.family() == Family::D && std::popcount(signs) % 2 != 0) continue;
      std::vector<std::int64_t> c(r);
      for (int i = 0; i < r; ++i) c[i] = ((signs >> i) & 1u ? -1 : 1) * lambda[perm[i]];
      out.insert(Weight(std::move(c)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {out.begin(), out.end()};
}

std::int64_t exterior_rank_naive(const RankProfile& p) {
  if (p.k < 0 || p.k > p.n) throw ArgumentError("exterior power k must satisfy 0 <= k <= n");
  if (p.zero < 0 || p.plus < 0 || p.minus < 0 || p.zero + p.plus + p.minus != p.n) {
    throw ArgumentError("rank profile multiplicities must be nonnegative and sum to n");
  }
  if (p.k == 0) return 1;
  std::vector<int> spectrum;
  spectrum.insert(spectrum.end(), p.zero, 0);
  spectrum.insert(spectrum.end(), p.plus, 1);
  spectrum.insert(spectrum.end(), p.minus, -1);

  // walk k-subsets as index combinations
  std::vector<int> idx(p.k);
  std::iota(idx.begin(), idx.end(), 0);
  std::int64_t total = 0, nonzero = 0;
  while (true) {
    if (++total > kMaxSubsets) throw OracleScaleError("naive exterior rank limited to 10^6 subsets");
    int sum = 0;
    for (int i : idx) sum += spectrum[i];
    if (sum != 0) ++nonzero;
    int pos = p.k - 1;
    while (pos >= 0 && idx[pos] == p.n - p.k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < p.k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return nonzero;
}

}  // namespace weylcert::oracle

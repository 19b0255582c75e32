#include "weylcert/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "weylcert/errors.hpp"

namespace weylcert::linalg {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

namespace {

// Reduced row echelon form in place, pivoting only in the first `cols`
// columns but eliminating across the whole row; returns pivot columns.
std::vector<int> row_reduce(RationalMatrix& a, int cols) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(a.size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    const Rational lead = a[r][c];
    for (auto& x : a[r]) x /= lead;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows.front().size());
  return static_cast<int>(row_reduce(rows, cols).size());
}

RationalMatrix nullspace(RationalMatrix rows, int cols) {
  const auto pivots = row_reduce(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalMatrix> inverse(RationalMatrix m) {
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    m[i].resize(2 * n, Rational(0));
    m[i][n + i] = 1;
  }
  const auto pivots = row_reduce(m, n);
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;
  RationalMatrix inv(n);
  for (int i = 0; i < n; ++i) inv[i].assign(m[i].begin() + n, m[i].end());
  return inv;
}

std::vector<std::int64_t> primitive_integer(std::span<const Rational> v) {
  std::int64_t lcm = 1;
  for (const auto& q : v) lcm = std::lcm(lcm, q.denominator());
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  std::int64_t g = 0;
  for (const auto& q : v) {
    const std::int64_t x = q.numerator() * (lcm / q.denominator());
    out.push_back(x);
    g = std::gcd(g, x);
  }
  if (g == 0) throw ArgumentError("primitive_integer: zero vector");
  const auto first = std::find_if(out.begin(), out.end(), [](std::int64_t x) { return x != 0; });
  if (*first < 0) g = -g;
  for (auto& x : out) x /= g;
  return out;
}

RationalVector EchelonBasis::reduce(RationalVector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int c = pivots_[i];
    if (v[c] == 0) continue;
    const Rational f = v[c];
    for (int j = c; j < dim_; ++j) v[j] -= f * rows_[i][j];
  }
  return v;
}

bool EchelonBasis::insert(RationalVector v) {
  v = reduce(std::move(v));
  const auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
  if (it == v.end()) return false;
  const int c = static_cast<int>(it - v.begin());
  const Rational lead = v[c];
  for (auto& x : v) x /= lead;
  // keep earlier rows reduced against the new pivot so reduce() stays one pass
  for (auto& row : rows_) {
    if (row[c] == 0) continue;
    const Rational f = row[c];
    for (int j = 0; j < dim_; ++j) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(c);
  return true;
}

bool EchelonBasis::spans(RationalVector v) const {
  v = reduce(std::move(v));
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

std::vector<std::int64_t> smith_diagonal(IntegerMatrix m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m.front().size());
  const int n = std::min(rows, cols);
  for (int t = 0; t < n; ++t) {
    // move a nonzero entry of minimal absolute value to (t, t)
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pi < 0 || std::abs(m[i][j]) < std::abs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        const std::int64_t q = m[i][t] / m[t][t];
        for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        const std::int64_t q = m[t][j] / m[t][t];
        for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold any row that m[t][t] does not divide into row t
      bool divides = true;
      for (int i = t + 1; i < rows && divides; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (int k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  std::vector<std::int64_t> diag;
  for (int t = 0; t < n; ++t) diag.push_back(std::abs(m[t][t]));
  return diag;
}

}  // namespace weylcert::linalg

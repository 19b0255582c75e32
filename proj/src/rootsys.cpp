#include "weylcert/rootsys.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>

#include "weylcert/errors.hpp"

namespace weylcert {

Family parse_family(std::string_view text) {
  if (text == "B" || text == "b") return Family::B;
  if (text == "C" || text == "c") return Family::C;
  if (text == "D" || text == "d") return Family::D;
  throw ArgumentError("unknown root system family '" + std::string(text) + "' (expected B, C or D)");
}

char to_char(Family f) { return static_cast<char>(f); }

int min_rank(Family f) {
  switch (f) {
    case Family::B: return 2;
    case Family::C: return 3;
    case Family::D: return 4;
  }
  return 0;
}

Rational pairing(const Weight& mu, const Weight& alpha) {
  const std::int64_t aa = alpha.dot4(alpha);
  if (aa == 0) throw ArgumentError("pairing: alpha must be nonzero");
  return Rational(2 * mu.dot4(alpha), aa);
}

namespace {

bool first_nonzero_positive(const Weight& w) {
  for (auto x : w.coords2()) {
    if (x != 0) return x > 0;
  }
  return false;
}

}  // namespace

RootSystem RootSystem::build(Family family, int rank) {
  if (rank < min_rank(family) || rank > kMaxRank) {
    throw ArgumentError(std::string("rank ") + std::to_string(rank) + " out of range for type " +
                        to_char(family) + " (need " + std::to_string(min_rank(family)) +
                        " <= r <= " + std::to_string(kMaxRank) + ")");
  }
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  const int r = rank;

  std::vector<Weight> roots;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) roots.push_back(Weight::unit(r, i, si) + Weight::unit(r, j, sj));
      }
    }
    if (family == Family::B) {
      roots.push_back(Weight::unit(r, i, 1));
      roots.push_back(Weight::unit(r, i, -1));
    } else if (family == Family::C) {
      roots.push_back(Weight::unit(r, i, 2));
      roots.push_back(Weight::unit(r, i, -2));
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  rs.roots_ = roots;
  rs.root_set_ = {roots.begin(), roots.end()};
  for (const auto& a : roots) {
    if (first_nonzero_positive(a)) rs.positive_roots_.push_back(a);
  }

  for (int i = 0; i + 1 < r; ++i) rs.simple_roots_.push_back(Weight::unit(r, i) - Weight::unit(r, i + 1));
  switch (family) {
    case Family::B: rs.simple_roots_.push_back(Weight::unit(r, r - 1)); break;
    case Family::C: rs.simple_roots_.push_back(Weight::unit(r, r - 1, 2)); break;
    case Family::D: rs.simple_roots_.push_back(Weight::unit(r, r - 2) + Weight::unit(r, r - 1)); break;
  }

  // simple-root basis: column i holds alpha_i
  linalg::RationalMatrix basis(r, linalg::RationalVector(r));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) basis[k][i] = Rational(rs.simple_roots_[i][k], 2);
  rs.simple_basis_inverse_ = *linalg::inverse(basis);

  // fundamental weights: dual basis to the simple coroots
  linalg::RationalMatrix coroots(r, linalg::RationalVector(r));
  for (int j = 0; j < r; ++j) {
    const auto& a = rs.simple_roots_[j];
    const Rational aa(a.dot4(a), 4);
    for (int k = 0; k < r; ++k) coroots[j][k] = Rational(2 * a[k], 2) / aa;
  }
  const auto dual = *linalg::inverse(coroots);
  for (int i = 0; i < r; ++i) {
    std::vector<Rational> phi(r);
    for (int k = 0; k < r; ++k) phi[k] = dual[k][i];
    rs.fundamental_weights_.push_back(Weight::from_rationals(phi));
  }

  Weight two_rho = Weight::zero(r);
  for (const auto& a : rs.positive_roots_) two_rho += a;
  std::vector<std::int64_t> rho(r);
  for (int k = 0; k < r; ++k) rho[k] = two_rho[k] / 2;
  rs.rho_ = Weight(std::move(rho));
  return rs;
}

std::string RootSystem::label() const { return std::string(1, to_char(family_)) + std::to_string(rank_); }

std::uint64_t RootSystem::weyl_order() const {
  std::uint64_t order = 1;
  for (int i = 2; i <= rank_; ++i) order *= static_cast<std::uint64_t>(i);
  const int sign_bits = family_ == Family::D ? rank_ - 1 : rank_;
  return order << sign_bits;
}

linalg::IntegerMatrix RootSystem::cartan_matrix() const {
  linalg::IntegerMatrix a(rank_, std::vector<std::int64_t>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) a[i][j] = pairing(simple_roots_[i], simple_roots_[j]).numerator();
  return a;
}

std::int64_t RootSystem::pq_index() const {
  std::int64_t index = 1;
  for (auto d : linalg::smith_diagonal(cartan_matrix())) index *= d;
  return index;
}

std::vector<std::int64_t> RootSystem::pq_invariant_factors() const {
  std::vector<std::int64_t> out;
  for (auto d : linalg::smith_diagonal(cartan_matrix())) {
    if (d != 1) out.push_back(d);
  }
  return out;
}

std::vector<Rational> RootSystem::simple_root_coefficients(const Weight& w) const {
  std::vector<Rational> c(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k) c[i] += simple_basis_inverse_[i][k] * w.coord(k);
  return c;
}

std::vector<std::int64_t> RootSystem::fundamental_coefficients(const Weight& mu) const {
  std::vector<std::int64_t> c;
  c.reserve(rank_);
  for (const auto& a : simple_roots_) {
    const Rational p = pairing(mu, a);
    if (!is_integer(p)) throw LatticeError("weight (" + mu.to_string() + ") is not in the weight lattice");
    c.push_back(p.numerator());
  }
  return c;
}

bool RootSystem::in_weight_lattice(const Weight& mu) const {
  if (mu.rank() != rank_) return false;
  return std::all_of(simple_roots_.begin(), simple_roots_.end(),
                     [&](const Weight& a) { return is_integer(pairing(mu, a)); });
}

Weight RootSystem::from_fundamental(std::span<const std::int64_t> coeffs) const {
  if (static_cast<int>(coeffs.size()) != rank_) {
    throw ArgumentError("expected " + std::to_string(rank_) + " fundamental-weight coefficients, got " +
                        std::to_string(coeffs.size()));
  }
  Weight w = Weight::zero(rank_);
  for (int i = 0; i < rank_; ++i) w += coeffs[i] * fundamental_weights_[i];
  return w;
}

std::vector<Weight> RootSystem::vector_representation_weights() const {
  std::vector<Weight> out;
  for (int i = 0; i < rank_; ++i) {
    out.push_back(Weight::unit(rank_, i));
    out.push_back(Weight::unit(rank_, i, -1));
  }
  if (family_ == Family::B) out.push_back(Weight::zero(rank_));
  return out;
}

// --- Dynkin diagrams -------------------------------------------------------

namespace {

struct Diagram {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<std::int64_t>> bond;  // a_ij * a_ji
};

Diagram diagram_of(const std::vector<Weight>& roots) {
  Diagram d;
  d.n = static_cast<int>(roots.size());
  d.adj.resize(d.n);
  d.bond.assign(d.n, std::vector<std::int64_t>(d.n, 0));
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j) {
      if (i == j) continue;
      const Rational aij = pairing(roots[i], roots[j]);
      if (aij == 0) continue;
      d.adj[i].push_back(j);
      d.bond[i][j] = (aij * pairing(roots[j], roots[i])).numerator();
    }
  return d;
}

bool is_connected(const Diagram& d) {
  if (d.n == 0) return false;
  std::vector<bool> seen(d.n, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int u : d.adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        q.push(u);
      }
  }
  return count == d.n;
}

// Follows a chain from `start` away from `prev` until a leaf.
std::vector<int> walk(const Diagram& d, int start, int prev = -1) {
  std::vector<int> path{start};
  int cur = start;
  while (d.adj[cur].size() <= 2) {
    int next = -1;
    for (int u : d.adj[cur])
      if (u != prev) next = u;
    if (next < 0) break;
    path.push_back(next);
    prev = cur;
    cur = next;
  }
  return path;
}

struct Detected {
  SubsystemType type;
  std::vector<int> order;
};

std::optional<Detected> classify(const std::vector<Weight>& roots, const Diagram& d) {
  const int n = d.n;
  if (n == 1) return Detected{{'A', 1}, {0}};
  std::vector<std::pair<int, int>> multiple;
  int branch = -1;
  for (int i = 0; i < n; ++i) {
    if (d.adj[i].size() > 3) return std::nullopt;
    if (d.adj[i].size() == 3) {
      if (branch >= 0) return std::nullopt;
      branch = i;
    }
    for (int j : d.adj[i]) {
      if (d.bond[i][j] > 2) return std::nullopt;
      if (d.bond[i][j] == 2 && i < j) multiple.emplace_back(i, j);
    }
  }
  std::vector<int> leaves;
  for (int i = 0; i < n; ++i)
    if (d.adj[i].size() == 1) leaves.push_back(i);

  if (!multiple.empty()) {
    if (multiple.size() > 1 || branch >= 0) return std::nullopt;
    auto [u, v] = multiple.front();
    const auto len = [&](int i) { return roots[i].dot4(roots[i]); };
    if (n == 2) {
      // B2 and C2 coincide; list the long root first.
      return len(u) >= len(v) ? Detected{{'B', 2}, {u, v}} : Detected{{'B', 2}, {v, u}};
    }
    int end = -1, inner = -1;
    if (d.adj[v].size() == 1) {
      end = v;
      inner = u;
    } else if (d.adj[u].size() == 1) {
      end = u;
      inner = v;
    } else {
      return std::nullopt;  // double bond in the middle (F4)
    }
    const int far = leaves.front() == end ? leaves.back() : leaves.front();
    auto order = walk(d, far);
    if (static_cast<int>(order.size()) != n || order.back() != end) return std::nullopt;
    const char letter = len(end) < len(inner) ? 'B' : 'C';
    return Detected{{letter, n}, order};
  }

  if (branch < 0) {
    const int start = std::min(leaves.front(), leaves.back());
    auto order = walk(d, start);
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return Detected{{'A', n}, order};
  }

  // one trivalent vertex: D_n iff two of its arms are single vertices
  std::vector<std::vector<int>> arms;
  for (int u : d.adj[branch]) arms.push_back(walk(d, u, branch));
  std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
  });
  if (arms[0].size() != 1 || arms[1].size() != 1) return std::nullopt;
  std::vector<int> order(arms[2].rbegin(), arms[2].rend());
  order.push_back(branch);
  order.push_back(arms[0].front());
  order.push_back(arms[1].front());
  return Detected{{'D', n}, order};
}

}  // namespace

SimpleSubsystem make_subsystem(std::vector<Weight> roots, std::vector<int> simple_indices) {
  SimpleSubsystem s;
  s.roots = std::move(roots);
  s.simple_indices = std::move(simple_indices);
  const Diagram d = diagram_of(s.roots);
  s.connected = is_connected(d);
  if (!s.connected) return s;
  if (auto det = classify(s.roots, d)) {
    s.type = det->type;
    for (int i : det->order) s.standard_order.push_back(s.roots[i]);
  } else {
    s.type = SubsystemType{'?', d.n};
  }
  return s;
}

std::vector<Weight> boundary_subset(const SimpleSubsystem& pi) {
  if (!pi.connected || !pi.type) throw UnsupportedTypeError("boundary subset needs an indecomposable simple system");
  const auto& t = *pi.type;
  const auto& a = pi.standard_order;
  const int n = t.rank;
  switch (t.letter) {
    case 'B':
      if (n >= 5) return {a[0]};
      return {a[0], a[n - 1]};
    case 'C':
      return {a[0], a[1]};
    case 'D':
      if (n >= 7) return {a[0]};
      return {a[0], a[n - 2], a[n - 1]};
    default:
      throw UnsupportedTypeError("boundary subset is tabulated only for types B, C, D (got " + t.label() + ")");
  }
}

std::vector<SimpleSubsystem> pc_family(const RootSystem& rs) {
  const int r = rs.rank();
  if (r <= 2) throw ArgumentError("pc_family requires rank > 2");
  std::vector<std::vector<int>> members;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    if (std::popcount(mask) != r - 2) continue;
    std::vector<int> idx;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    members.push_back(idx);
  }
  std::sort(members.begin(), members.end());
  std::vector<SimpleSubsystem> out;
  for (const auto& idx : members) {
    std::vector<Weight> roots;
    std::vector<int> one_based;
    for (int i : idx) {
      roots.push_back(rs.simple_roots()[i]);
      one_based.push_back(i + 1);
    }
    auto s = make_subsystem(std::move(roots), std::move(one_based));
    if (s.connected) out.push_back(std::move(s));
  }
  return out;
}

SimpleSubsystem subsystem_simple_system(const RootSystem& rs, const Hyperplane& h) {
  std::vector<Weight> positive;
  for (const auto& a : rs.positive_roots())
    if (h.contains(a)) positive.push_back(a);
  std::unordered_set<Weight, WeightHash> sums;
  for (std::size_t i = 0; i < positive.size(); ++i)
    for (std::size_t j = i + 1; j < positive.size(); ++j) sums.insert(positive[i] + positive[j]);
  std::vector<Weight> simple;
  for (const auto& a : positive)
    if (!sums.contains(a)) simple.push_back(a);
  // list by height so the output order is stable
  std::stable_sort(simple.begin(), simple.end(), [&](const Weight& x, const Weight& y) {
    const auto cx = rs.simple_root_coefficients(x);
    const auto cy = rs.simple_root_coefficients(y);
    const Rational hx = std::accumulate(cx.begin(), cx.end(), Rational(0));
    const Rational hy = std::accumulate(cy.begin(), cy.end(), Rational(0));
    return hx != hy ? hx < hy : cx > cy;
  });
  if (simple.empty()) return SimpleSubsystem{};
  return make_subsystem(std::move(simple));
}

}  // namespace weylcert

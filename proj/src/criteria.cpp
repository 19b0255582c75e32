#include "weylcert/criteria.hpp"

#include <algorithm>

#include "weylcert/errors.hpp"
#include "weylcert/excision.hpp"
#include "weylcert/weyl.hpp"

namespace weylcert {

namespace {

std::string pair_text(const Weight& x, const Weight& y) {
  return "(" + x.to_string() + ") and (" + y.to_string() + ")";
}

}  // namespace

Certificate check_nosm(const WeightSystem& ws, std::span<const Weight> omega) {
  const RootSystem& rs = *ws.rs;
  Certificate c;
  c.lambda = ws.lambda;
  c.omega.assign(omega.begin(), omega.end());
  c.delta = ws.delta;
  std::vector<std::string> failures;

  const OrbitSet lambda_orbit = orbit(rs, ws.lambda);
  c.flags.omega_in_orbit = true;
  for (const auto& x : omega) {
    if (!lambda_orbit.contains(x)) {
      c.flags.omega_in_orbit = false;
      failures.push_back("omega-not-in-orbit: (" + x.to_string() + ")");
      break;
    }
  }

  try {
    c.hyperplane = span_hyperplane(omega);
    c.flags.codim_one = true;
  } catch (const RankError& e) {
    failures.push_back(std::string("rank: ") + e.what());
  }

  if (c.hyperplane) {
    const auto off = weights_off(ws, *c.hyperplane);
    c.weights_off_set = off.set_count;
    c.weights_off_multiset = off.multiset_count;
    c.roots_off = roots_off(rs, *c.hyperplane);
    c.flags.inequality = c.lhs() > c.rhs();
    if (!c.flags.inequality) {
      failures.push_back("inequality: " + std::to_string(c.lhs()) + " <= " + std::to_string(c.rhs()));
    }
  }

  c.flags.omega_difference_free = true;
  for (std::size_t i = 0; i < omega.size() && c.flags.omega_difference_free; ++i)
    for (std::size_t j = 0; j < omega.size(); ++j)
      if (i != j && rs.is_root(omega[i] - omega[j])) {
        c.flags.omega_difference_free = false;
        failures.push_back("omega-difference-in-Delta: " + pair_text(omega[i], omega[j]));
        break;
      }

  c.flags.two_lambda_clear = check_two_lambda(rs, ws.lambda);
  c.flags.omega_sum_free = true;
  for (std::size_t i = 0; i < omega.size() && c.flags.omega_sum_free; ++i)
    for (std::size_t j = i; j < omega.size(); ++j)
      if (rs.is_root(omega[i] + omega[j])) {
        c.flags.omega_sum_free = false;
        if (c.delta == 1) failures.push_back("omega-sum-in-Delta: " + pair_text(omega[i], omega[j]));
        break;
      }
  if (c.delta == 1 && !c.flags.two_lambda_clear) {
    failures.push_back("two-lambda-in-Delta-sums: 2 (" + ws.lambda.to_string() + ")");
  }

  c.valid = failures.empty();
  if (!c.valid) c.reason = failures.front();
  return c;
}

bool revalidate(const RootSystem& rs, const Certificate& cert) {
  const WeightSystem fresh = weight_system(rs, cert.lambda);
  const Certificate again = check_nosm(fresh, cert.omega);
  return again.valid && again.lhs() == cert.lhs() && again.rhs() == cert.rhs() &&
         again.hyperplane == cert.hyperplane;
}

bool check_two_lambda(const RootSystem& rs, const Weight& lambda) {
  const Weight twice = 2 * lambda;
  if (rs.is_root(twice)) return false;
  return std::none_of(rs.roots().begin(), rs.roots().end(),
                      [&](const Weight& a) { return rs.is_root(twice - a); });
}

BmsCheck check_bms(const WeightSystem& ws, const Hyperplane& h) {
  BmsCheck b;
  b.lhs = ws.delta * weights_off(ws, h).multiset_count;
  b.rhs = roots_off(*ws.rs, h) + 6;
  b.holds = b.lhs <= b.rhs;
  return b;
}

namespace {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 v = 1;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t exterior_rank(const RankProfile& p) {
  if (p.zero < 0 || p.plus < 0 || p.minus < 0 || p.zero + p.plus + p.minus != p.n) {
    throw ArgumentError("rank profile multiplicities must be nonnegative and sum to n");
  }
  if (p.k < 0 || p.k > p.n) throw ArgumentError("exterior power k must satisfy 0 <= k <= n");
  // the 0-th power is the trivial line, counted with rank 1
  if (p.k == 0) return 1;
  // a k-subset sums to zero iff it takes equally many +1 and -1 eigenvalues
  std::int64_t kernel = 0;
  for (int b = 0; 2 * b <= p.k; ++b) {
    kernel += binomial(p.zero, p.k - 2 * b) * binomial(p.plus, b) * binomial(p.minus, b);
  }
  return binomial(p.n, p.k) - kernel;
}

RankProfile vector_rank_profile(const RootSystem& rs, const Weight& alpha, int k) {
  if (!rs.is_root(alpha)) throw ArgumentError("(" + alpha.to_string() + ") is not a root");
  RankProfile p;
  p.k = k;
  for (const auto& w : rs.vector_representation_weights()) {
    const Rational e = pairing(w, alpha);
    if (e == 0) {
      ++p.zero;
    } else if (e == 1) {
      ++p.plus;
    } else if (e == -1) {
      ++p.minus;
    } else {
      throw ArgumentError("h_alpha has an eigenvalue outside {0, 1, -1} on the defining representation");
    }
    ++p.n;
  }
  return p;
}

RankContradiction rank_contradiction(const RootSystem& rs, const Weight& lambda, const Weight& alpha, int k) {
  RankContradiction out;
  out.profile = vector_rank_profile(rs, alpha, k);
  out.exterior_rank = exterior_rank(out.profile);
  const Hyperplane h = Hyperplane::orthogonal_to(alpha);
  out.roots_off = roots_off(rs, h);
  out.delta = delta_indicator(rs, lambda);
  out.contradiction = out.delta * out.exterior_rank > out.roots_off + 6;
  out.direct_weight_count = weights_off(weight_system(rs, lambda), h).multiset_count;
  return out;
}

}  // namespace weylcert

#include "weylcert/weightset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "weylcert/errors.hpp"
#include "weylcert/weyl.hpp"

namespace weylcert {

bool conv_membership(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  const Weight top = chamber_image(rs, lambda);
  const auto c = rs.simple_root_coefficients(top - chamber_image(rs, mu));
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return q >= 0; });
}

std::int64_t WeightSystem::multiset_count() const {
  return std::accumulate(multiplicity.begin(), multiplicity.end(), std::int64_t{0});
}

bool WeightSystem::contains(const Weight& mu) const {
  return std::binary_search(support.begin(), support.end(), mu);
}

std::int64_t WeightSystem::multiplicity_of(const Weight& mu) const {
  const auto it = std::lower_bound(support.begin(), support.end(), mu);
  if (it == support.end() || *it != mu) return 0;
  return multiplicity[static_cast<std::size_t>(it - support.begin())];
}

namespace {

using WeightSet = std::unordered_set<Weight, WeightHash>;

WeightSet enumerate_support(const RootSystem& rs, const Weight& lambda) {
  WeightSet seen{lambda};
  std::vector<Weight> level{lambda};
  while (!level.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : level) {
      for (const auto& a : rs.simple_roots()) {
        Weight nu = mu - a;
        if (seen.contains(nu) || !conv_membership(rs, lambda, nu)) continue;
        seen.insert(nu);
        next.push_back(std::move(nu));
      }
    }
    level = std::move(next);
  }
  return seen;
}

Rational height(const RootSystem& rs, const Weight& w) {
  const auto c = rs.simple_root_coefficients(w);
  return std::accumulate(c.begin(), c.end(), Rational(0));
}

std::map<Weight, std::int64_t> freudenthal(const RootSystem& rs, const Weight& lambda, const WeightSet& support) {
  std::vector<Weight> dominant;
  for (const auto& mu : support)
    if (chamber_image(rs, mu) == mu) dominant.push_back(mu);
  // increasing depth below lambda; every term of the recursion is shallower
  std::sort(dominant.begin(), dominant.end(), [&](const Weight& a, const Weight& b) {
    const Rational ha = height(rs, lambda - a), hb = height(rs, lambda - b);
    return ha != hb ? ha < hb : a > b;
  });
  const Weight lr = lambda + rs.rho();
  const std::int64_t top = lr.dot4(lr);
  std::map<Weight, std::int64_t> mult;
  for (const auto& mu : dominant) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (const auto& a : rs.positive_roots()) {
      for (Weight nu = mu + a; support.contains(nu); nu += a) {
        sum += mult.at(chamber_image(rs, nu)) * nu.dot4(a);
      }
    }
    const Weight mr = mu + rs.rho();
    const std::int64_t denom = top - mr.dot4(mr);
    if (denom <= 0 || (2 * sum) % denom != 0) {
      throw Error("Freudenthal recursion produced a non-integral multiplicity at (" + mu.to_string() + ")");
    }
    mult[mu] = 2 * sum / denom;
  }
  return mult;
}

}  // namespace

WeightSystem weight_system(const RootSystem& rs, const Weight& lambda) {
  WeightSystem ws;
  ws.rs = &rs;
  ws.lambda = dominant_representative(rs, lambda);
  const WeightSet support = enumerate_support(rs, ws.lambda);
  const auto dom_mult = freudenthal(rs, ws.lambda, support);
  ws.support.assign(support.begin(), support.end());
  std::sort(ws.support.begin(), ws.support.end());
  ws.multiplicity.reserve(ws.support.size());
  for (const auto& mu : ws.support) ws.multiplicity.push_back(dom_mult.at(chamber_image(rs, mu)));
  ws.delta = ws.lambda.is_zero() ? 1 : delta_indicator(rs, ws.lambda);
  return ws;
}

std::map<Weight, std::int64_t> dominant_multiplicities(const RootSystem& rs, const Weight& lambda) {
  const Weight top = dominant_representative(rs, lambda);
  return freudenthal(rs, top, enumerate_support(rs, top));
}

std::int64_t freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  const Weight top = dominant_representative(rs, lambda);
  if (!lattice_membership(rs, top - mu).in_Q || !conv_membership(rs, top, mu)) return 0;
  const auto table = dominant_multiplicities(rs, top);
  return table.at(chamber_image(rs, mu));
}

std::uint64_t weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  using boost::multiprecision::cpp_int;
  const Weight top = dominant_representative(rs, lambda);
  const Weight lr = top + rs.rho();
  cpp_int num = 1, den = 1;
  for (const auto& a : rs.positive_roots()) {
    num *= lr.dot4(a);
    den *= rs.rho().dot4(a);
  }
  if (num % den != 0) throw Error("Weyl dimension formula gave a non-integer");
  const cpp_int dim = num / den;
  if (dim > std::numeric_limits<std::uint64_t>::max()) throw ArgumentError("Weyl dimension exceeds 64 bits");
  return static_cast<std::uint64_t>(dim);
}

int delta_indicator(const RootSystem& rs, const Weight& lambda) {
  if (lambda.is_zero()) throw ArgumentError("delta_indicator: lambda must be nonzero");
  const Weight top = dominant_representative(rs, lambda);
  if (chamber_image(rs, -top) != top) return 2;
  Rational s = 0;
  for (const auto& a : rs.positive_roots()) s += pairing(top, a);
  return s.numerator() % 2 == 0 ? 1 : 2;
}

LatticeFlags lattice_membership(const RootSystem& rs, const Weight& mu) {
  LatticeFlags f;
  f.in_P = rs.in_weight_lattice(mu);
  if (f.in_P) {
    const auto c = rs.simple_root_coefficients(mu);
    f.in_Q = std::all_of(c.begin(), c.end(), [](const Rational& q) { return is_integer(q); });
  }
  return f;
}

}  // namespace weylcert

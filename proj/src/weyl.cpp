#include "weylcert/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "weylcert/errors.hpp"

namespace weylcert {

Weight chamber_image(const RootSystem& rs, const Weight& mu) {
  std::vector<std::int64_t> c = mu.coords2();
  int negatives = 0;
  for (auto& x : c) {
    if (x < 0) {
      ++negatives;
      x = -x;
    }
  }
  std::sort(c.begin(), c.end(), std::greater<>());
  // D only has even sign changes; an odd count is absorbed by the smallest entry
  if (rs.family() == Family::D && negatives % 2 == 1) c.back() = -c.back();
  return Weight(std::move(c));
}

Weight dominant_representative(const RootSystem& rs, const Weight& mu) {
  if (!rs.in_weight_lattice(mu)) {
    throw LatticeError("weight (" + mu.to_string() + ") is not in the weight lattice of " + rs.label());
  }
  return chamber_image(rs, mu);
}

bool is_dominant(const RootSystem& rs, const Weight& mu) {
  for (const auto& a : rs.simple_roots()) {
    if (pairing(mu, a) < 0) return false;
  }
  return true;
}

Weight reflect(const RootSystem& rs, const Weight& alpha, const Weight& mu) {
  if (!rs.is_root(alpha)) throw ArgumentError("reflect: (" + alpha.to_string() + ") is not a root of " + rs.label());
  const Rational k = pairing(mu, alpha);
  // mu - k alpha on doubled coordinates; k may be half-integral only off the lattice
  std::vector<Rational> out = mu.rationals();
  for (int i = 0; i < mu.rank(); ++i) out[i] -= k * alpha.coord(i);
  return Weight::from_rationals(out);
}

Weight simple_reflection(const RootSystem& rs, int i, const Weight& mu) {
  return reflect(rs, rs.simple_roots().at(i), mu);
}

bool OrbitSet::contains(const Weight& w) const {
  return std::binary_search(elements.begin(), elements.end(), w);
}

OrbitSet orbit(const RootSystem& rs, const Weight& lambda) {
  OrbitSet out;
  out.dominant = dominant_representative(rs, lambda);
  out.normalized_input = out.dominant != lambda;
  std::unordered_set<Weight, WeightHash> seen{out.dominant};
  std::vector<Weight> frontier{out.dominant};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier) {
      for (const auto& a : rs.simple_roots()) {
        const Rational k = pairing(mu, a);
        if (k == 0) continue;
        Weight image = mu - k.numerator() * a;
        if (seen.insert(image).second) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  out.elements.assign(seen.begin(), seen.end());
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

}  // namespace weylcert

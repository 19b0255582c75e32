#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "weylcert/rootsys.hpp"
#include "weylcert/scan.hpp"
#include "weylcert/weight.hpp"
#include "weylcert/weyl.hpp"

namespace testing {

using weylcert::Family;
using weylcert::RootSystem;
using weylcert::Weight;

inline Weight e(int r, int i, std::int64_t scale = 1) { return Weight::unit(r, i - 1, scale); }
inline const Weight& phi(const RootSystem& rs, int i) { return rs.fundamental_weights()[i - 1]; }

/// Weight from plain doubled coordinates, e.g. w2({3, 1, 1}) = (3/2, 1/2, 1/2).
inline Weight w2(std::vector<std::int64_t> c) { return Weight(std::move(c)); }

struct FamilyRank {
  Family family;
  int rank;
};

/// Every (family, rank) with rank in [lo, hi] that the family allows.
inline std::vector<FamilyRank> systems(int lo, int hi) {
  std::vector<FamilyRank> out;
  for (Family f : {Family::B, Family::C, Family::D})
    for (int r = std::max(lo, weylcert::min_rank(f)); r <= hi; ++r) out.push_back({f, r});
  return out;
}

/// Dominant weights with coefficient sum <= bound, as weights.
inline std::vector<Weight> dominant_weights(const RootSystem& rs, int bound) {
  std::vector<Weight> out;
  for (const auto& c : weylcert::dominant_coefficients(rs.rank(), bound)) out.push_back(rs.from_fundamental(c));
  return out;
}

/// A random Weyl group element applied to mu, as a word of simple reflections.
inline Weight random_w(const RootSystem& rs, Weight mu, std::mt19937_64& rng, int length = 24) {
  std::uniform_int_distribution<int> pick(0, rs.rank() - 1);
  for (int i = 0; i < length; ++i) mu = weylcert::simple_reflection(rs, pick(rng), mu);
  return mu;
}

/// Random point of P: integer or (for B/D) all-half-integer coordinates in [-b, b].
inline Weight random_weight(const RootSystem& rs, std::mt19937_64& rng, int b = 3) {
  std::uniform_int_distribution<int> coord(-b, b);
  const bool half = rs.family() != Family::C && rng() % 2 == 0;
  std::vector<std::int64_t> c(rs.rank());
  for (auto& x : c) x = half ? 2 * coord(rng) + 1 : 2 * coord(rng);
  return Weight(c);
}

}  // namespace testing

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "weylcert/hyperplane.hpp"
#include "weylcert/rootsys.hpp"
#include "weylcert/weightset.hpp"

namespace weylcert {

/// |Delta \ H|. Equals dim [xi, g] for xi spanning the normal line of H.
std::int64_t roots_off(const RootSystem& rs, const Hyperplane& h);
/// |Delta ∩ H|
std::int64_t roots_on(const RootSystem& rs, const Hyperplane& h);

struct WeightCounts {
  std::size_t set_count = 0;
  std::int64_t multiset_count = 0;
};

/// Weights of `ws` off H, counted as a set and with multiplicities.
WeightCounts weights_off(const WeightSystem& ws, const Hyperplane& h);
WeightCounts weights_on(const WeightSystem& ws, const Hyperplane& h);

/// |S \ H| for an arbitrary finite set.
std::size_t count_off(std::span<const Weight> s, const Hyperplane& h);

/// Lower bound sum_{x in K} (x, alpha^vee) for |<Lambda> \ H|, valid whenever
/// alpha is a root off H, K is inside the support, and no two distinct points
/// of K differ by a nonzero multiple of alpha. Each violated precondition
/// throws CertificateInvalidError naming the offending data.
std::int64_t sxa_lower_bound(const WeightSystem& ws, const Hyperplane& h, const Weight& alpha,
                             std::span<const Weight> k);

/// |S|/2, a lower bound for |S \ H| when e_p is off H, S is stable under the
/// sign flip of coordinate p, and no point of S has x_p = 0. `p` is 0-based.
/// Precondition failures throw CertificateInvalidError.
std::int64_t gamma_half_bound(std::span<const Weight> s, int p, const Hyperplane& h);

}  // namespace weylcert

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "weylcert/rootsys.hpp"
#include "weylcert/weight.hpp"

namespace weylcert {

/// mu ∈ conv(W lambda), decided by dominance: lambda - dom(mu) must be a
/// nonnegative rational combination of simple roots.
bool conv_membership(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// The saturated set conv(W lambda) ∩ (lambda + Q), i.e. the weights of the
/// irreducible module with highest weight lambda, with multiplicities.
///
/// `rs` must outlive the WeightSystem.
struct WeightSystem {
  const RootSystem* rs = nullptr;
  Weight lambda;
  /// Sorted.
  std::vector<Weight> support;
  /// Parallel to `support`.
  std::vector<std::int64_t> multiplicity;
  /// 1 for orthogonal (real type) modules, 2 otherwise. The trivial module counts as orthogonal.
  int delta = 1;

  std::size_t set_count() const { return support.size(); }
  std::int64_t multiset_count() const;
  bool contains(const Weight& mu) const;
  /// 0 when mu is not a weight.
  std::int64_t multiplicity_of(const Weight& mu) const;
};

/// Enumerates the support level by level downward from lambda and fills in
/// Freudenthal multiplicities. A non-dominant lambda is replaced by its
/// dominant representative. Throws LatticeError if lambda is not in P.
WeightSystem weight_system(const RootSystem& rs, const Weight& lambda);

/// Multiplicities of the dominant weights of L(lambda), by Freudenthal's
/// recursion, keyed by weight.
std::map<Weight, std::int64_t> dominant_multiplicities(const RootSystem& rs, const Weight& lambda);

/// Multiplicity of mu in L(lambda); 0 iff mu is not a weight.
std::int64_t freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// prod over positive roots of (lambda + rho, a^vee) / (rho, a^vee).
/// Throws ArgumentError if the result does not fit in 64 bits.
std::uint64_t weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// 1 if L(lambda) is orthogonal, 2 if it is symplectic or not self-dual.
/// Self-dual iff dom(-lambda) = lambda; then orthogonal iff (lambda, 2 rho^vee) is even.
/// Throws ArgumentError for lambda = 0.
int delta_indicator(const RootSystem& rs, const Weight& lambda);

struct LatticeFlags {
  bool in_P = false;
  bool in_Q = false;
};

LatticeFlags lattice_membership(const RootSystem& rs, const Weight& mu);

}  // namespace weylcert

#pragma once

#include <cstddef>
#include <vector>

#include "weylcert/rootsys.hpp"
#include "weylcert/weight.hpp"

namespace weylcert {

/// Image of `mu` in the closed chamber
///   x1 >= ... >= xr >= 0 (B, C),   x1 >= ... >= x_{r-1} >= |x_r| (D),
/// without any lattice check. Works for any point with half-integer coordinates.
Weight chamber_image(const RootSystem& rs, const Weight& mu);

/// The unique element of W mu in the closed chamber. Throws LatticeError when
/// mu is not in the weight lattice P.
Weight dominant_representative(const RootSystem& rs, const Weight& mu);

bool is_dominant(const RootSystem& rs, const Weight& mu);

/// s_alpha(mu) = mu - (mu, alpha^vee) alpha. Throws ArgumentError if alpha is not a root.
Weight reflect(const RootSystem& rs, const Weight& alpha, const Weight& mu);

/// Reflection in the i-th simple root (0-based).
Weight simple_reflection(const RootSystem& rs, int i, const Weight& mu);

/// A Weyl orbit with its dominant representative; elements sorted.
struct OrbitSet {
  Weight dominant;
  std::vector<Weight> elements;
  /// True when orbit() was handed a non-dominant weight and normalized it.
  bool normalized_input = false;

  std::size_t size() const { return elements.size(); }
  bool contains(const Weight& w) const;
};

/// Breadth-first closure of {lambda} under the simple reflections.
OrbitSet orbit(const RootSystem& rs, const Weight& lambda);

}  // namespace weylcert

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylcert/hyperplane.hpp"
#include "weylcert/rootsys.hpp"
#include "weylcert/weight.hpp"

namespace weylcert {

/// A known choice of Omega ⊆ W lambda for a specific highest weight.
struct Witness {
  std::string name;
  Weight lambda;
  std::vector<Weight> omega;
  /// Set only when the witness is stated for a fixed hyperplane rather than span(Omega).
  std::optional<Hyperplane> hyperplane;
};

/// Every built-in witness available for this root system.
std::vector<Witness> known_witnesses(const RootSystem& rs);

/// The built-in witness whose highest weight is dom(lambda). For D, the image
/// under the diagram automorphism swapping the two half-spin nodes is tried as well.
std::optional<Witness> witness_for(const RootSystem& rs, const Weight& lambda);

}  // namespace weylcert

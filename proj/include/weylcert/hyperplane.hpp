#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weylcert/rational.hpp"
#include "weylcert/weight.hpp"

namespace weylcert {

/// A linear hyperplane of R^r, stored by its primitive integral normal
/// (first nonzero entry positive), so equal hyperplanes compare equal.
class Hyperplane {
 public:
  /// Throws ArgumentError on a zero normal.
  static Hyperplane from_normal(std::span<const Rational> normal);
  static Hyperplane from_normal(std::span<const std::int64_t> normal);
  /// The orthogonal complement of a nonzero weight.
  static Hyperplane orthogonal_to(const Weight& w);

  int ambient_rank() const { return static_cast<int>(normal_.size()); }
  const std::vector<std::int64_t>& normal() const { return normal_; }
  /// Spanning vectors, when the hyperplane was built from them.
  const std::optional<std::vector<Weight>>& generators() const { return generators_; }

  /// (mu, normal) = 0, exactly.
  bool contains(const Weight& mu) const { return level(mu) == 0; }
  /// 2 (mu, normal); zero iff mu lies in the hyperplane.
  std::int64_t level(const Weight& mu) const;

  /// "normal:1,-1,0,0"
  std::string to_string() const;

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.normal_ == b.normal_; }

 private:
  friend Hyperplane span_hyperplane(std::span<const Weight> vectors);
  std::vector<std::int64_t> normal_;
  std::optional<std::vector<Weight>> generators_;
};

/// The span of `vectors`, which must have dimension exactly r - 1.
/// Throws RankError (carrying the actual rank) otherwise.
Hyperplane span_hyperplane(std::span<const Weight> vectors);

}  // namespace weylcert

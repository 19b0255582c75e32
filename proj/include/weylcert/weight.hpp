#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "weylcert/rational.hpp"

namespace weylcert {

/// A point of the weight lattice in epsilon-coordinates, stored doubled so
/// that half-integer (spinor) coordinates are exact: x_i = coords2[i] / 2.
///
/// Ordering is lexicographic on the doubled coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<std::int64_t> coords2) : coords2_(std::move(coords2)) {}

  static Weight zero(int rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }
  /// scale * epsilon_i, with `i` 0-based.
  static Weight unit(int rank, int i, std::int64_t scale = 1);
  /// Throws LatticeError unless every coordinate is in (1/2)Z.
  static Weight from_rationals(std::span<const Rational> coords);

  int rank() const { return static_cast<int>(coords2_.size()); }
  const std::vector<std::int64_t>& coords2() const { return coords2_; }
  std::int64_t operator[](std::size_t i) const { return coords2_[i]; }
  Rational coord(std::size_t i) const { return Rational(coords2_[i], 2); }
  std::vector<Rational> rationals() const;
  bool is_zero() const;

  /// 4 * (this, other): the inner product on doubled coordinates.
  std::int64_t dot4(const Weight& other) const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(std::int64_t k, Weight a);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    return a.coords2_ <=> b.coords2_;
  }

  /// Comma-separated exact coordinates, e.g. "1/2,-1/2,3/2".
  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords2_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// Exact Euclidean inner product.
inline Rational inner(const Weight& a, const Weight& b) { return Rational(a.dot4(b), 4); }

}  // namespace weylcert

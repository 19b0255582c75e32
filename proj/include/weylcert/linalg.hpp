#pragma once

// Small dense exact linear algebra over Q and Z. Sizes here never exceed a
// few dozen rows, so everything is plain Gaussian elimination.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "weylcert/rational.hpp"

namespace weylcert::linalg {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using IntegerMatrix = std::vector<std::vector<std::int64_t>>;

RationalMatrix to_rational(const IntegerMatrix& m);

/// Rank of the row space.
int rank(RationalMatrix rows);

/// Basis of {x : rows * x = 0}; `cols` is the ambient dimension.
RationalMatrix nullspace(RationalMatrix rows, int cols);

/// Inverse of a square matrix; nullopt when singular.
std::optional<RationalMatrix> inverse(RationalMatrix m);

/// Scales a nonzero rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
std::vector<std::int64_t> primitive_integer(std::span<const Rational> v);

/// Incremental row-echelon basis, used to test linear independence one vector
/// at a time during backtracking.
class EchelonBasis {
 public:
  explicit EchelonBasis(int dim) : dim_(dim) {}

  /// Adds `v` if it is independent of the current rows; returns whether it was.
  bool insert(RationalVector v);
  /// Whether `v` lies in the current span.
  bool spans(RationalVector v) const;
  int size() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }

 private:
  RationalVector reduce(RationalVector v) const;

  int dim_;
  RationalMatrix rows_;
  std::vector<int> pivots_;
};

/// Diagonal of the Smith normal form (invariant factors, nonnegative, each
/// dividing the next; zeros last).
std::vector<std::int64_t> smith_diagonal(IntegerMatrix m);

}  // namespace weylcert::linalg

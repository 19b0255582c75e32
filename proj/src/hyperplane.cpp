#include "weylcert/hyperplane.hpp"

#include <algorithm>

#include "weylcert/errors.hpp"
#include "weylcert/linalg.hpp"

namespace weylcert {

Hyperplane Hyperplane::from_normal(std::span<const Rational> normal) {
  if (std::all_of(normal.begin(), normal.end(), [](const Rational& q) { return q == 0; })) {
    throw ArgumentError("hyperplane normal must be nonzero");
  }
  Hyperplane h;
  h.normal_ = linalg::primitive_integer(normal);
  return h;
}

Hyperplane Hyperplane::from_normal(std::span<const std::int64_t> normal) {
  std::vector<Rational> q(normal.begin(), normal.end());
  return from_normal(std::span<const Rational>(q));
}

Hyperplane Hyperplane::orthogonal_to(const Weight& w) {
  return from_normal(std::span<const std::int64_t>(w.coords2()));
}

std::int64_t Hyperplane::level(const Weight& mu) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < normal_.size(); ++i) s += normal_[i] * mu[i];
  return s;
}

std::string Hyperplane::to_string() const {
  std::string out = "normal:";
  for (std::size_t i = 0; i < normal_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(normal_[i]);
  }
  return out;
}

Hyperplane span_hyperplane(std::span<const Weight> vectors) {
  if (vectors.empty()) throw RankError("span_hyperplane: empty generator list", 0);
  const int r = vectors.front().rank();
  linalg::RationalMatrix rows;
  for (const auto& v : vectors) {
    if (v.rank() != r) throw ArgumentError("span_hyperplane: mixed ranks");
    rows.emplace_back(v.coords2().begin(), v.coords2().end());
  }
  const auto kernel = linalg::nullspace(rows, r);
  const int actual = r - static_cast<int>(kernel.size());
  if (actual != r - 1) {
    throw RankError("span has dimension " + std::to_string(actual) + ", expected " +
                        std::to_string(r - 1),
                    actual);
  }
  Hyperplane h = Hyperplane::from_normal(std::span<const Rational>(kernel.front()));
  h.generators_ = std::vector<Weight>(vectors.begin(), vectors.end());
  return h;
}

}  // namespace weylcert
